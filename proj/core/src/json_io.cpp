#include "avop/json_io.hpp"

#include <fstream>

namespace avop {

namespace {

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw input_error(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) throw input_error(std::string("field \"") + name + "\" must be an integer");
  return f.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw input_error(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_table(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(int_array(row, what));
  return out;
}

json int_table_to_json(const std::vector<std::vector<int>>& t) {
  json rows = json::array();
  for (const auto& r : t) rows.push_back(r);
  return rows;
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class((long)j.get<long long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw input_error("rational parts must be integers or decimal strings");
}

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

FiniteMagma magma_from_json(const json& j) {
  FiniteMagma m;
  m.size = int_field(j, "size");
  m.table = int_table(field(j, "table"), "table");
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) m.labels.push_back(l.get<std::string>());
    if ((int)m.labels.size() != m.size) throw input_error("labels length must equal size");
  }
  require_well_formed(m);
  return m;
}

json magma_to_json(const FiniteMagma& m) {
  json j;
  j["size"] = m.size;
  j["table"] = int_table_to_json(m.table);
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j;
}

FiniteGroup group_from_json(const json& j) {
  FiniteMagma m = magma_from_json(j);
  GroupResult r = validate_group(m);
  if (!r.ok) throw input_error("table is not a group: " + r.witness.axiom + " fails");
  if (j.contains("identity") && j["identity"].get<int>() != r.group.identity)
    throw input_error("declared identity disagrees with the table");
  return r.group;
}

json group_to_json(const FiniteGroup& g) {
  json j = magma_to_json(g.magma);
  j["identity"] = g.identity;
  return j;
}

SetMap setmap_from_json(const json& j) {
  SetMap f;
  f.size = int_field(j, "size");
  f.image = int_array(field(j, "map"), "map");
  if ((int)f.image.size() != f.size) throw input_error("map length must equal size");
  return f;
}

json setmap_to_json(const SetMap& f) {
  json j;
  j["size"] = f.size;
  j["map"] = f.image;
  return j;
}

GroupAction action_from_json(const json& j) {
  GroupAction a;
  a.group = group_from_json(field(j, "group"));
  a.set_size = int_field(j, "set_size");
  a.phi = int_table(field(j, "phi"), "phi");
  Check c = validate_action(a);
  if (!c) throw input_error("not a group action: " + c.witness.axiom + " fails");
  return a;
}

json action_to_json(const GroupAction& a) {
  json j;
  j["group"] = group_to_json(a.group);
  j["set_size"] = a.set_size;
  j["phi"] = int_table_to_json(a.phi);
  return j;
}

RackPairing pairing_from_json(const json& j) {
  RackPairing p;
  int n = int_field(j, "size");
  p.diamond = FiniteMagma{n, int_table(field(j, "diamond"), "diamond"), {}};
  p.blackdiamond = FiniteMagma{n, int_table(field(j, "blackdiamond"), "blackdiamond"), {}};
  require_well_formed(p.diamond);
  require_well_formed(p.blackdiamond);
  return p;
}

json pairing_to_json(const RackPairing& p) {
  json j;
  j["size"] = p.diamond.size;
  j["diamond"] = int_table_to_json(p.diamond.table);
  j["blackdiamond"] = int_table_to_json(p.blackdiamond.table);
  return j;
}

SkewBrace brace_from_json(const json& j) {
  FiniteMagma dot = magma_from_json(field(j, "dot"));
  FiniteMagma bullet = magma_from_json(field(j, "bullet"));
  return require_skew_brace(dot, bullet);
}

json brace_to_json(const SkewBrace& b) {
  json j;
  j["dot"] = group_to_json(b.dot);
  j["bullet"] = group_to_json(b.bullet);
  j["two_sided"] = b.two_sided;
  return j;
}

DiRack dirack_from_json(const json& j) {
  DiRack d;
  int n = int_field(j, "size");
  d.diamond = FiniteMagma{n, int_table(field(j, "diamond"), "diamond"), {}};
  d.tri = FiniteMagma{n, int_table(field(j, "tri"), "tri"), {}};
  require_well_formed(d.diamond);
  require_well_formed(d.tri);
  return d;
}

json dirack_to_json(const DiRack& d) {
  json j;
  j["size"] = d.diamond.size;
  j["diamond"] = int_table_to_json(d.diamond.table);
  j["tri"] = int_table_to_json(d.tri.table);
  return j;
}

SetSolution solution_from_json(const json& j) {
  SetSolution s;
  s.size = int_field(j, "size");
  const json& r = field(j, "r");
  s.first.assign(s.size, {});
  s.second.assign(s.size, {});
  if (!r.is_array() || (int)r.size() != s.size) throw input_error("r must have size rows");
  for (int x = 0; x < s.size; ++x) {
    const json& row = r[x];
    if (!row.is_array() || (int)row.size() != s.size) throw input_error("r row has wrong length");
    for (const auto& pr : row) {
      if (!pr.is_array() || pr.size() != 2) throw input_error("r entries must be [u,v] pairs");
      s.first[x].push_back(pr[0].get<int>());
      s.second[x].push_back(pr[1].get<int>());
    }
  }
  require_well_formed(s);
  return s;
}

json solution_to_json(const SetSolution& s) {
  json rows = json::array();
  for (int x = 0; x < s.size; ++x) {
    json row = json::array();
    for (int y = 0; y < s.size; ++y) row.push_back(json::array({s.first[x][y], s.second[x][y]}));
    rows.push_back(row);
  }
  json j;
  j["size"] = s.size;
  j["r"] = rows;
  return j;
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  if (!j.is_array() || j.size() != 2) throw input_error("rationals must be [num, den] pairs");
  mpz_class den = mpz_from_json(j[1]);
  if (den == 0) throw input_error("rational with zero denominator");
  return Rat(mpz_from_json(j[0]), den);
}

json rat_to_json(const Rat& r) {
  return json::array({mpz_to_json(r.num()), mpz_to_json(r.den())});
}

StructureConstants sc_from_json(const json& j) {
  int d = int_field(j, "dim");
  if (d <= 0) throw input_error("dim must be positive");
  StructureConstants sc(d);
  const json& c = field(j, "c");
  if (!c.is_array() || (int)c.size() != d) throw input_error("c must have dim slabs");
  for (int i = 0; i < d; ++i) {
    if (!c[i].is_array() || (int)c[i].size() != d) throw input_error("c slab has wrong shape");
    for (int jj = 0; jj < d; ++jj) {
      if (!c[i][jj].is_array() || (int)c[i][jj].size() != d)
        throw input_error("c row has wrong shape");
      for (int k = 0; k < d; ++k) sc.at(i, jj, k) = rat_from_json(c[i][jj][k]);
    }
  }
  return sc;
}

json sc_to_json(const StructureConstants& sc) {
  json c = json::array();
  for (int i = 0; i < sc.dim; ++i) {
    json slab = json::array();
    for (int jj = 0; jj < sc.dim; ++jj) {
      json row = json::array();
      for (int k = 0; k < sc.dim; ++k) row.push_back(rat_to_json(sc.at(i, jj, k)));
      slab.push_back(row);
    }
    c.push_back(slab);
  }
  json j;
  j["dim"] = sc.dim;
  j["c"] = c;
  return j;
}

LinearMap linmap_from_json(const json& j) {
  int r = int_field(j, "rows"), c = int_field(j, "cols");
  if (r <= 0 || c <= 0) throw input_error("matrix dimensions must be positive");
  LinearMap m(r, c);
  const json& rows = field(j, "m");
  if (!rows.is_array() || (int)rows.size() != r) throw input_error("m must have rows rows");
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || (int)rows[i].size() != c) throw input_error("m row has wrong length");
    for (int jj = 0; jj < c; ++jj) m.at(i, jj) = rat_from_json(rows[i][jj]);
  }
  return m;
}

json linmap_to_json(const LinearMap& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["m"] = rows;
  return j;
}

DiLeibniz dileibniz_from_json(const json& j) {
  int d = int_field(j, "dim");
  json left;
  left["dim"] = d;
  left["c"] = field(j, "left");
  json right;
  right["dim"] = d;
  right["c"] = field(j, "right");
  return DiLeibniz{sc_from_json(left), sc_from_json(right)};
}

json dileibniz_to_json(const DiLeibniz& d) {
  json j;
  j["dim"] = d.dim();
  j["left"] = sc_to_json(d.left)["c"];
  j["right"] = sc_to_json(d.right)["c"];
  return j;
}

BiRepresentation rep_from_json(const json& j) {
  int d = int_field(j, "alg_dim"), m = int_field(j, "mod_dim");
  if (d <= 0 || m <= 0) throw input_error("representation dimensions must be positive");
  BiRepresentation rep(d, m);
  const json& rl = field(j, "rhoL");
  const json& rr = field(j, "rhoR");
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < m; ++jj)
      for (int k = 0; k < m; ++k) rep.l(i, jj, k) = rat_from_json(rl.at(i).at(jj).at(k));
  for (int i = 0; i < m; ++i)
    for (int jj = 0; jj < d; ++jj)
      for (int k = 0; k < m; ++k) rep.r(i, jj, k) = rat_from_json(rr.at(i).at(jj).at(k));
  return rep;
}

json rep_to_json(const BiRepresentation& rep) {
  json rl = json::array(), rr = json::array();
  for (int i = 0; i < rep.alg_dim; ++i) {
    json slab = json::array();
    for (int j = 0; j < rep.mod_dim; ++j) {
      json row = json::array();
      for (int k = 0; k < rep.mod_dim; ++k) row.push_back(rat_to_json(rep.l(i, j, k)));
      slab.push_back(row);
    }
    rl.push_back(slab);
  }
  for (int i = 0; i < rep.mod_dim; ++i) {
    json slab = json::array();
    for (int j = 0; j < rep.alg_dim; ++j) {
      json row = json::array();
      for (int k = 0; k < rep.mod_dim; ++k) row.push_back(rat_to_json(rep.r(i, j, k)));
      slab.push_back(row);
    }
    rr.push_back(slab);
  }
  json j;
  j["alg_dim"] = rep.alg_dim;
  j["mod_dim"] = rep.mod_dim;
  j["rhoL"] = rl;
  j["rhoR"] = rr;
  return j;
}

json ga_element_to_json(const FiniteGroup& g, const Vec& coeffs) {
  json cs = json::array();
  for (const Rat& r : coeffs) cs.push_back(rat_to_json(r));
  json j;
  j["group"] = group_to_json(g);
  j["coeffs"] = cs;
  return j;
}

Vec ga_element_from_json(const json& j, int expected_size) {
  const json& cs = field(j, "coeffs");
  if (!cs.is_array() || (int)cs.size() != expected_size)
    throw input_error("coeffs length must equal the group order");
  Vec out;
  for (const auto& c : cs) out.push_back(rat_from_json(c));
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("JSON parse error in " + path + ": " + e.what());
  }
}

}  // namespace avop
