#include "avop/magma.hpp"

#include <algorithm>
#include <numeric>

namespace avop {

SetMap identity_map(int n) {
  SetMap f{n, std::vector<int>(n)};
  std::iota(f.image.begin(), f.image.end(), 0);
  return f;
}

bool is_permutation(const SetMap& f) {
  std::vector<char> seen(f.size, 0);
  for (int v : f.image) {
    if (v < 0 || v >= f.size || seen[v]) return false;
    seen[v] = 1;
  }
  return (int)f.image.size() == f.size;
}

SetMap compose(const SetMap& f, const SetMap& g) {
  SetMap h{g.size, std::vector<int>(g.size)};
  for (int x = 0; x < g.size; ++x) h.image[x] = f.image[g.image[x]];
  return h;
}

SetMap inverse_permutation(const SetMap& f) {
  SetMap h{f.size, std::vector<int>(f.size)};
  for (int x = 0; x < f.size; ++x) h.image[f.image[x]] = x;
  return h;
}

SetMap power_of(const SetMap& f, int k) {
  SetMap p = identity_map(f.size);
  for (int i = 0; i < k; ++i) p = compose(f, p);
  return p;
}

void require_well_formed(const FiniteMagma& m) {
  if (m.size <= 0) throw input_error("magma size must be positive");
  if ((int)m.table.size() != m.size)
    throw input_error("magma table has " + std::to_string(m.table.size()) +
                      " rows, expected " + std::to_string(m.size));
  for (int x = 0; x < m.size; ++x) {
    if ((int)m.table[x].size() != m.size)
      throw input_error("magma row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < m.size; ++y) {
      int v = m.table[x][y];
      if (v < 0 || v >= m.size)
        throw input_error("magma entry (" + std::to_string(x) + "," +
                          std::to_string(y) + ") = " + std::to_string(v) +
                          " out of range");
    }
  }
}

RackReport validate_rack(const FiniteMagma& m, std::optional<int> pointed_at) {
  require_well_formed(m);
  RackReport rep;
  const int n = m.size;

  // Unique solvability of x <> c = y on a finite carrier == each row is a
  // permutation.
  bool rows_ok = true;
  for (int x = 0; x < n && rows_ok; ++x) {
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
      int v = m.table[x][y];
      if (seen[v]) {
        rep.witnesses.push_back({"left-translation-bijective", {x, y}});
        rows_ok = false;
        break;
      }
      seen[v] = 1;
    }
  }

  bool dist_ok = true;
  for (int x = 0; x < n && dist_ok; ++x)
    for (int y = 0; y < n && dist_ok; ++y)
      for (int z = 0; z < n; ++z)
        if (m.at(x, m.at(y, z)) != m.at(m.at(x, y), m.at(x, z))) {
          rep.witnesses.push_back({"left-distributivity", {x, y, z}});
          dist_ok = false;
          break;
        }

  rep.is_rack = rows_ok && dist_ok;

  bool idem = true;
  for (int x = 0; x < n; ++x)
    if (m.at(x, x) != x) {
      if (rep.is_rack) rep.witnesses.push_back({"idempotence", {x}});
      idem = false;
      break;
    }
  rep.is_quandle = rep.is_rack && idem;

  for (int e = 0; e < n; ++e) {
    bool pointed = true;
    for (int x = 0; x < n && pointed; ++x)
      pointed = m.at(x, e) == e && m.at(e, x) == x;
    if (pointed) rep.pointed_elements.push_back(e);
  }
  if (pointed_at) {
    int e = *pointed_at;
    if (e < 0 || e >= n) throw input_error("pointed_at element out of range");
    if (std::find(rep.pointed_elements.begin(), rep.pointed_elements.end(), e) ==
        rep.pointed_elements.end()) {
      int bad = 0;
      for (int x = 0; x < n; ++x)
        if (m.at(x, e) != e || m.at(e, x) != x) { bad = x; break; }
      rep.witnesses.push_back({"pointedness", {e, bad}});
    }
  }
  return rep;
}

bool is_rack(const FiniteMagma& m) { return validate_rack(m).is_rack; }

SetMap left_translation(const FiniteMagma& m, int x) {
  return SetMap{m.size, m.table[x]};
}

FiniteMagma trivial_rack(int n) {
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.table[x][y] = y;
  return m;
}

FiniteMagma flip_rack(int n) {
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.table[x][y] = n - 1 - y;
  return m;
}

bool is_rack_homomorphism(const SetMap& f, const FiniteMagma& q, const FiniteMagma& q2) {
  if (f.size != q.size) throw input_error("map domain does not match source rack");
  for (int v : f.image)
    if (v < 0 || v >= q2.size) throw input_error("map image exceeds target rack");
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y)
      if (f(q.at(x, y)) != q2.at(f(x), f(y))) return false;
  return true;
}

bool is_subrack(const std::vector<int>& subset, const FiniteMagma& q) {
  std::vector<char> in(q.size, 0);
  for (int s : subset) {
    if (s < 0 || s >= q.size) throw input_error("subset element out of range");
    in[s] = 1;
  }
  for (int x : subset)
    for (int y : subset)
      if (!in[q.at(x, y)]) return false;
  return true;
}

bool is_complete_rack(const FiniteMagma& q) {
  for (int x = 0; x < q.size; ++x) {
    std::vector<char> seen(q.size, 0);
    for (int c = 0; c < q.size; ++c) {
      int v = q.at(c, x);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

std::vector<SetMap> rack_automorphism_group(const FiniteMagma& q, int max_size) {
  require_well_formed(q);
  if (q.size > max_size)
    throw guard_error("rack automorphism search refused for size " +
                      std::to_string(q.size) + " > " + std::to_string(max_size));
  std::vector<SetMap> out;
  std::vector<int> perm(q.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SetMap f{q.size, perm};
    bool ok = true;
    for (int x = 0; x < q.size && ok; ++x)
      for (int y = 0; y < q.size; ++y)
        if (f(q.at(x, y)) != q.at(f(x), f(y))) { ok = false; break; }
    if (ok) out.push_back(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;  // next_permutation yields lexicographic order already
}

}  // namespace avop
