#include "avop/averaging.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "avop/pairing.hpp"

namespace avop {

Check is_averaging(const FiniteGroup& g, const SetMap& a) {
  if (a.size != g.size()) throw input_error("operator size does not match group");
  for (int v : a.image)
    if (v < 0 || v >= g.size()) throw input_error("operator image out of range");
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (g.conj(a(x), a(y)) != a(g.conj(a(x), y)))
        return Check::fail("group-averaging-identity", {x, y});
  return {};
}

Check is_averaging(const FiniteMagma& rack, const SetMap& a) {
  if (a.size != rack.size) throw input_error("operator size does not match rack");
  for (int v : a.image)
    if (v < 0 || v >= rack.size) throw input_error("operator image out of range");
  for (int x = 0; x < rack.size; ++x)
    for (int y = 0; y < rack.size; ++y)
      if (rack.at(a(x), a(y)) != a(rack.at(a(x), y)))
        return Check::fail("rack-averaging-identity", {x, y});
  return {};
}

namespace {

// Depth-first enumeration with constraint propagation. Once A(x) and A(y)
// are both assigned, the averaging identity pins A at p = A(x)<>y (rack)
// or p = A(x) y A(x)^-1 (group) to the already-known left-hand side.
struct AvgEnum {
  const FiniteGroup* grp = nullptr;
  const FiniteMagma* rack = nullptr;
  int n = 0;
  std::vector<int> img;
  std::vector<SetMap> found;

  bool assign(int x, int v, std::vector<int>& trail) {
    if (img[x] >= 0) return img[x] == v;
    img[x] = v;
    trail.push_back(x);
    for (int y = 0; y < n; ++y) {
      if (img[y] < 0) continue;
      if (!enforce(x, y, trail)) return false;
      if (y != x && !enforce(y, x, trail)) return false;
    }
    return true;
  }

  // img[x] and img[y] must both be assigned.
  bool enforce(int x, int y, std::vector<int>& trail) {
    int ax = img[x], ay = img[y];
    int p, v;
    if (grp) {
      p = grp->conj(ax, y);
      v = grp->conj(ax, ay);
    } else {
      p = rack->at(ax, y);
      v = rack->at(ax, ay);
    }
    return assign(p, v, trail);
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      img[trail.back()] = -1;
      trail.pop_back();
    }
  }

  void run(int pos, std::vector<int>& trail) {
    while (pos < n && img[pos] >= 0) ++pos;
    if (pos == n) {
      found.push_back(SetMap{n, img});
      return;
    }
    for (int v = 0; v < n; ++v) {
      size_t mark = trail.size();
      if (assign(pos, v, trail)) run(pos + 1, trail);
      undo(trail, mark);
    }
  }
};

std::vector<SetMap> enumerate_impl(const FiniteGroup* grp, const FiniteMagma* rack,
                                   const EnumOptions& opt) {
  const int n = grp ? grp->size() : rack->size;
  if (n > opt.max_size)
    throw guard_error("averaging enumeration refused for size " + std::to_string(n) +
                      " > " + std::to_string(opt.max_size) + "; raise --max-size");

  AvgEnum base;
  base.grp = grp;
  base.rack = rack;
  base.n = n;
  base.img.assign(n, -1);

  std::vector<int> trail;
  if (opt.pointed_only) {
    int e;
    if (grp) {
      e = grp->identity;
    } else {
      if (!opt.pointed_at) throw input_error("pointed-only rack enumeration needs the pointed element");
      e = *opt.pointed_at;
      if (e < 0 || e >= n) throw input_error("pointed element out of range");
    }
    if (!base.assign(e, e, trail)) return {};
  }

  int first = 0;
  while (first < n && base.img[first] >= 0) ++first;

  std::vector<SetMap> all;
  if (first == n) {
    base.run(0, trail);
    all = std::move(base.found);
  } else if (opt.parallel && n >= 6 && std::thread::hardware_concurrency() > 1) {
    // Partition on the first free position; branches are independent and
    // merged in branch order, so the result is identical to the serial run.
    std::vector<std::future<std::vector<SetMap>>> parts;
    for (int v = 0; v < n; ++v)
      parts.push_back(std::async(std::launch::async, [&base, first, v]() {
        AvgEnum local = base;
        std::vector<int> tr;
        if (local.assign(first, v, tr)) local.run(first + 1, tr);
        return std::move(local.found);
      }));
    for (auto& p : parts) {
      auto part = p.get();
      all.insert(all.end(), part.begin(), part.end());
    }
  } else {
    base.run(first, trail);
    all = std::move(base.found);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<SetMap> enumerate_averaging(const FiniteGroup& g, const EnumOptions& opt) {
  return enumerate_impl(&g, nullptr, opt);
}

std::vector<SetMap> enumerate_averaging(const FiniteMagma& rack, const EnumOptions& opt) {
  return enumerate_impl(nullptr, &rack, opt);
}

FiniteMagma descendent_rack(const FiniteGroup& g, const SetMap& a) {
  Check c = is_averaging(g, a);
  if (!c)
    throw precondition_error("descendent rack needs an averaging operator; identity fails at (" +
                             std::to_string(c.witness.where[0]) + "," +
                             std::to_string(c.witness.where[1]) + ")");
  const int n = g.size();
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.table[x][y] = g.conj(a(x), y);
  return m;
}

FiniteMagma descendent_rack(const FiniteMagma& rack, const SetMap& a) {
  Check c = is_averaging(rack, a);
  if (!c)
    throw precondition_error("descendent rack needs an averaging operator; identity fails at (" +
                             std::to_string(c.witness.where[0]) + "," +
                             std::to_string(c.witness.where[1]) + ")");
  const int n = rack.size;
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.table[x][y] = rack.at(a(x), y);
  return m;
}

FiniteMagma adjoint_pair_rack(const FiniteGroup& g) {
  const int n = g.size(), sz = n * n;
  FiniteMagma m{sz, std::vector<std::vector<int>>(sz, std::vector<int>(sz))};
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = 0; g2 < n; ++g2)
      for (int h1 = 0; h1 < n; ++h1)
        for (int h2 = 0; h2 < n; ++h2)
          m.table[g1 * n + g2][h1 * n + h2] = g.conj(g1, h1) * n + g.conj(g1, h2);
  return m;
}

FiniteMagma action_pair_rack(const GroupAction& act) {
  Check c = validate_action(act);
  if (!c) throw precondition_error("invalid action: " + c.witness.axiom);
  const int n = act.group.size(), k = act.set_size, sz = n * k;
  FiniteMagma m{sz, std::vector<std::vector<int>>(sz, std::vector<int>(sz))};
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < k; ++x)
      for (int h = 0; h < n; ++h)
        for (int y = 0; y < k; ++y)
          m.table[g * k + x][h * k + y] = act.group.conj(g, h) * k + act.act(g, y);
  return m;
}

FiniteMagma transported_pair_rack(const FiniteGroup& g, const SetMap& a) {
  if (a.size != g.size()) throw input_error("operator size does not match group");
  const int n = g.size(), sz = n * n;
  FiniteMagma adj = adjoint_pair_rack(g);
  // xi(u,v) = (A(v) u, v); transport = xi^-1 ( xi(-) <> xi(-) ).
  auto xi = [&](int u, int v) { return g.mul(a(v), u) * n + v; };
  auto xi_inv = [&](int p) {
    int u = p / n, v = p % n;
    return g.mul(g.inv(a(v)), u) * n + v;
  };
  FiniteMagma m{sz, std::vector<std::vector<int>>(sz, std::vector<int>(sz))};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          m.table[u * n + v][s * n + t] = xi_inv(adj.table[xi(u, v)][xi(s, t)]);
  return m;
}

GraphCheck graph_check(const FiniteGroup& g, const SetMap& a) {
  if (a.size != g.size()) throw input_error("operator size does not match group");
  const int n = g.size();
  GraphCheck r;

  FiniteMagma adj = adjoint_pair_rack(g);
  std::vector<int> graph(n);
  for (int x = 0; x < n; ++x) graph[x] = a(x) * n + x;
  r.graph_is_subrack = is_subrack(graph, adj);

  FiniteMagma tr = transported_pair_rack(g, a);
  std::vector<int> axis(n);
  for (int x = 0; x < n; ++x) axis[x] = g.identity * n + x;
  r.axis_is_subrack = is_subrack(axis, tr);
  return r;
}

Check is_relative_averaging(const GroupAction& act, const SetMap& b) {
  if (b.size != act.set_size) throw input_error("operator domain does not match acted set");
  for (int v : b.image)
    if (v < 0 || v >= act.group.size()) throw input_error("operator image exceeds the group");
  for (int x = 0; x < act.set_size; ++x)
    for (int y = 0; y < act.set_size; ++y)
      if (act.group.conj(b(x), b(y)) != b(act.act(b(x), y)))
        return Check::fail("relative-averaging-identity", {x, y});
  return {};
}

FiniteMagma descendent_relative(const GroupAction& act, const SetMap& b) {
  Check c = is_relative_averaging(act, b);
  if (!c) throw precondition_error("descendent rack needs a relative averaging operator");
  const int m = act.set_size;
  FiniteMagma t{m, std::vector<std::vector<int>>(m, std::vector<int>(m))};
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t.table[x][y] = act.act(b(x), y);
  return t;
}

bool relative_graph_check(const GroupAction& act, const SetMap& b) {
  FiniteMagma pair = action_pair_rack(act);
  std::vector<int> graph(act.set_size);
  for (int x = 0; x < act.set_size; ++x) graph[x] = b(x) * act.set_size + x;
  return is_subrack(graph, pair);
}

Check validate_rack_module(const RackAction& act) {
  const int n = act.rack.size, m = act.set_size;
  if ((int)act.phi.size() != n) throw input_error("rack action has wrong number of rows");
  for (int x = 0; x < n; ++x) {
    if ((int)act.phi[x].size() != m) throw input_error("rack action row has wrong length");
    if (!is_permutation(SetMap{m, act.phi[x]}))
      return Check::fail("action-bijective", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < m; ++u)
        if (act.act(x, act.act(y, u)) != act.act(act.rack.at(x, y), act.act(x, u)))
          return Check::fail("rack-module-law", {x, y, u});
  return {};
}

Check is_relative_averaging_rack(const RackAction& act, const FiniteMagma& target_rack,
                                 const SetMap& a) {
  if (act.set_size != target_rack.size)
    throw input_error("acted set does not match the target rack");
  Check mod = validate_rack_module(act);
  if (!mod) throw precondition_error("invalid rack module: " + mod.witness.axiom);
  for (int x = 0; x < act.rack.size; ++x) {
    SetMap phix{act.set_size, act.phi[x]};
    if (!is_rack_homomorphism(phix, target_rack, target_rack))
      throw precondition_error("action of " + std::to_string(x) +
                               " is not a rack automorphism of the acted rack");
  }
  if (a.size != target_rack.size) throw input_error("operator domain does not match acted rack");
  for (int v : a.image)
    if (v < 0 || v >= act.rack.size) throw input_error("operator image exceeds the acting rack");
  for (int u = 0; u < target_rack.size; ++u)
    for (int v = 0; v < target_rack.size; ++v)
      if (act.rack.at(a(u), a(v)) != a(act.act(a(u), v)))
        return Check::fail("relative-averaging-identity", {u, v});
  return {};
}

FiniteMagma descendent_relative_rack(const RackAction& act, const SetMap& a) {
  const int m = act.set_size;
  FiniteMagma t{m, std::vector<std::vector<int>>(m, std::vector<int>(m))};
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) t.table[u][v] = act.act(a(u), v);
  return t;
}

PowerHierarchy power_hierarchy(const FiniteMagma& rack, const SetMap& a, int kmax, int lmax) {
  if (!is_averaging(rack, a))
    throw precondition_error("power hierarchy needs an averaging operator");
  const int n = rack.size, top = kmax + lmax;

  PowerHierarchy h;
  std::vector<SetMap> powers{identity_map(n)};
  for (int k = 1; k <= top; ++k) powers.push_back(compose(a, powers.back()));
  for (int k = 0; k <= top; ++k) {
    FiniteMagma t{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.table[x][y] = rack.at(powers[k](x), y);
    h.tables.push_back(std::move(t));
  }

  auto fail = [&](std::string ax, std::vector<int> w) {
    h.report = Check::fail(std::move(ax), std::move(w));
    return h;
  };
  for (int k = 0; k <= top; ++k)
    if (!is_averaging(rack, powers[k])) return fail("power-averaging", {k});
  for (int l = 0; l <= lmax; ++l)
    for (int k = 0; k <= kmax; ++k)
      if (!is_averaging(h.tables[l], powers[k])) return fail("power-averaging-on-descendent", {k, l});
  for (int l = 0; l <= lmax; ++l)
    for (int k = 0; k <= kmax; ++k)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (h.tables[l].at(powers[k](x), y) != h.tables[k + l].at(x, y))
            return fail("composite-descendent", {k, l, x, y});
  for (int l = 0; l <= lmax; ++l)
    for (int k = 0; k <= kmax; ++k)
      if (!is_rack_pairing(h.tables[k], h.tables[k + l]))
        return fail("hierarchy-rack-pairing", {k, k + l});
  return h;
}

bool is_ad_invariant_map(const FiniteGroup& g, const SetMap& c) {
  if (c.size != g.size()) throw input_error("map size does not match group");
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (c(g.conj(x, y)) != g.conj(x, c(y))) return false;
  return true;
}

GroupRackEmbedding embed_group_rack(const FiniteGroup& g, const FiniteMagma& bd) {
  GroupRackCheck gr = is_group_rack(g, bd, true);
  if (!gr.ok)
    throw precondition_error("not a pointed group-rack: " + gr.why.axiom + " fails");
  const int n = g.size();

  std::vector<SetMap> gens;
  gens.reserve(n);
  for (int x = 0; x < n; ++x) gens.push_back(left_translation(bd, x));
  GroupRackEmbedding e;
  e.inner = permutation_closure(gens, n);

  std::vector<SetMap> hom = e.inner.elements;  // each element acts on G as itself
  e.product = semidirect_product(e.inner.group, g, hom);

  const int k = (int)e.inner.elements.size();
  e.averaging = SetMap{k * n, std::vector<int>(k * n)};
  for (int i = 0; i < k; ++i)
    for (int y = 0; y < n; ++y) {
      int ly = e.inner.index_of(left_translation(bd, y));
      e.averaging.image[i * n + y] = ly * n + g.identity;
    }
  int id_idx = e.inner.index_of(identity_map(n));
  e.inclusion = SetMap{n, std::vector<int>(n)};
  for (int x = 0; x < n; ++x) e.inclusion.image[x] = id_idx * n + x;

  if (!is_averaging(e.product, e.averaging))
    throw internal_error("embedding operator is not averaging");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x < y && e.inclusion(x) == e.inclusion(y))
        throw internal_error("embedding inclusion is not injective");
      if (e.inclusion(g.mul(x, y)) != e.product.mul(e.inclusion(x), e.inclusion(y)))
        throw internal_error("embedding inclusion is not a group homomorphism");
      int u = e.inclusion(x), v = e.inclusion(y);
      int desc = e.product.conj(e.averaging(u), v);
      if (desc != e.inclusion(bd.at(x, y)))
        throw internal_error("embedding inclusion is not a rack morphism");
    }
  return e;
}

}  // namespace avop
