#include "avop/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace avop {

GroupResult validate_group(const FiniteMagma& m) {
  require_well_formed(m);
  GroupResult r;
  const int n = m.size;

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = m.at(cand, x) == x && m.at(x, cand) == x;
    if (ok) { e = cand; break; }
  }
  if (e < 0) {
    r.witness = {"identity", {}};
    return r;
  }

  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (m.at(x, y) == e && m.at(y, x) == e) { inv[x] = y; break; }
    if (inv[x] < 0) {
      r.witness = {"inverse", {x}};
      return r;
    }
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m.at(m.at(x, y), z) != m.at(x, m.at(y, z))) {
          r.witness = {"associativity", {x, y, z}};
          return r;
        }

  r.ok = true;
  r.group = FiniteGroup{m, e, std::move(inv)};
  return r;
}

FiniteGroup require_group(const FiniteMagma& m) {
  GroupResult r = validate_group(m);
  if (!r.ok)
    throw precondition_error("not a group: " + r.witness.axiom + " fails");
  return r.group;
}

Check validate_action(const GroupAction& a) {
  const int n = a.group.size(), m = a.set_size;
  if ((int)a.phi.size() != n) throw input_error("action table has wrong number of rows");
  for (int g = 0; g < n; ++g) {
    if ((int)a.phi[g].size() != m) throw input_error("action row has wrong length");
    for (int x = 0; x < m; ++x)
      if (a.phi[g][x] < 0 || a.phi[g][x] >= m) throw input_error("action value out of range");
  }
  for (int x = 0; x < m; ++x)
    if (a.act(a.group.identity, x) != x) return Check::fail("identity-acts-trivially", {x});
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < m; ++x)
        if (a.act(a.group.mul(g, h), x) != a.act(g, a.act(h, x)))
          return Check::fail("action-composition", {g, h, x});
  for (int g = 0; g < n; ++g)
    if (!is_permutation(SetMap{m, a.phi[g]})) return Check::fail("action-bijective", {g});
  return {};
}

GroupAction adjoint_action(const FiniteGroup& g) {
  GroupAction a{g, g.size(), {}};
  a.phi.assign(g.size(), std::vector<int>(g.size()));
  for (int x = 0; x < g.size(); ++x)
    for (int h = 0; h < g.size(); ++h) a.phi[x][h] = g.conj(x, h);
  return a;
}

namespace {

// DFS over images with subgroup-closure propagation: assigning f(a), f(b)
// forces f(ab) = f(a) f(b), which prunes nearly everything.
struct AutSearch {
  const FiniteGroup& src;
  const FiniteGroup& dst;
  std::vector<int> img;
  std::vector<int> used;
  std::vector<SetMap>* out;  // collect all when set
  bool found_any = false;
  bool stop_at_first = false;

  AutSearch(const FiniteGroup& s, const FiniteGroup& d)
      : src(s), dst(d), img(s.size(), -1), used(d.size(), 0) {}

  bool assign(int x, int v, std::vector<int>& trail) {
    if (img[x] >= 0) return img[x] == v;
    if (used[v]) return false;
    img[x] = v;
    used[v] = 1;
    trail.push_back(x);
    for (int a = 0; a < src.size(); ++a) {
      if (img[a] < 0) continue;
      if (!assign(src.mul(a, x), dst.mul(img[a], v), trail)) return false;
      if (!assign(src.mul(x, a), dst.mul(v, img[a]), trail)) return false;
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      used[img[x]] = 0;
      img[x] = -1;
    }
  }

  void run(int pos, std::vector<int>& trail) {
    if (stop_at_first && found_any) return;
    while (pos < src.size() && img[pos] >= 0) ++pos;
    if (pos == src.size()) {
      found_any = true;
      if (out) out->push_back(SetMap{src.size(), img});
      return;
    }
    for (int v = 0; v < dst.size(); ++v) {
      size_t mark = trail.size();
      if (assign(pos, v, trail)) run(pos + 1, trail);
      undo(trail, mark);
      if (stop_at_first && found_any) return;
    }
  }
};

}  // namespace

std::vector<SetMap> automorphism_group(const FiniteGroup& g, int max_size) {
  if (g.size() > max_size)
    throw guard_error("automorphism search refused for order " +
                      std::to_string(g.size()) + " > " + std::to_string(max_size));
  std::vector<SetMap> out;
  AutSearch s(g, g);
  s.out = &out;
  std::vector<int> trail;
  // Identity must map to identity; seed it to anchor the propagation.
  s.assign(g.identity, g.identity, trail);
  s.run(0, trail);
  std::sort(out.begin(), out.end());
  return out;
}

int PermGroup::index_of(const SetMap& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f);
  if (it == elements.end() || !(*it == f)) return -1;
  return (int)(it - elements.begin());
}

PermGroup permutation_closure(const std::vector<SetMap>& gens, int n_points) {
  for (const SetMap& f : gens) {
    if (f.size != n_points) throw input_error("generator acts on wrong number of points");
    if (!is_permutation(f)) throw input_error("generator is not a permutation");
  }
  std::map<std::vector<int>, int> seen;
  std::vector<SetMap> elems;
  auto push = [&](const SetMap& f) {
    if (seen.emplace(f.image, 0).second) elems.push_back(f);
  };
  push(identity_map(n_points));
  for (const SetMap& f : gens) push(f);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      push(compose(elems[i], elems[j]));
      if (i == 0) push(inverse_permutation(elems[j]));
    }
  // Breadth-first over a growing list: the loop above only covers pairs seen
  // so far, so iterate until no growth.
  size_t prev = 0;
  while (prev != elems.size()) {
    prev = elems.size();
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) push(compose(elems[i], elems[j]));
  }
  std::sort(elems.begin(), elems.end());

  PermGroup pg;
  pg.elements = elems;
  const int k = (int)elems.size();
  FiniteMagma comp{k, std::vector<std::vector<int>>(k, std::vector<int>(k))};
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[elems[i].image] = i;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      comp.table[i][j] = index.at(compose(elems[i], elems[j]).image);
  GroupResult r = validate_group(comp);
  if (!r.ok) throw internal_error("permutation closure is not a group");
  pg.group = r.group;
  return pg;
}

FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& h,
                               const std::vector<SetMap>& hom) {
  const int n = g.size(), m = h.size();
  if ((int)hom.size() != n) throw input_error("homomorphism table has wrong size");
  for (int a = 0; a < n; ++a) {
    if (hom[a].size != m || !is_permutation(hom[a]))
      throw precondition_error("hom(" + std::to_string(a) + ") is not a bijection of H");
    if (!is_group_homomorphism(hom[a], h, h))
      throw precondition_error("hom(" + std::to_string(a) + ") is not an automorphism of H");
  }
  if (!(hom[g.identity] == identity_map(m)))
    throw precondition_error("hom(e) is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(hom[g.mul(a, b)] == compose(hom[a], hom[b])))
        throw precondition_error("hom is not a homomorphism at (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");

  FiniteMagma prod{n * m, std::vector<std::vector<int>>(n * m, std::vector<int>(n * m))};
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < m; ++x)
      for (int b = 0; b < n; ++b)
        for (int y = 0; y < m; ++y)
          prod.table[a * m + x][b * m + y] = g.mul(a, b) * m + h.mul(x, hom[a](y));
  GroupResult r = validate_group(prod);
  if (!r.ok) throw internal_error("semidirect product failed " + r.witness.axiom);
  return r.group;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<SetMap> trivial(g.size(), identity_map(h.size()));
  return semidirect_product(g, h, trivial);
}

FiniteGroup cyclic_group(int n) {
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[a][b] = (a + b) % n;
  return require_group(m);
}

FiniteGroup klein_four_group() {
  FiniteMagma m{4, std::vector<std::vector<int>>(4, std::vector<int>(4))};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m.table[a][b] = a ^ b;
  return require_group(m);
}

std::vector<SetMap> permutations_of(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SetMap> out;
  do out.push_back(SetMap{m, p});
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric_group(int m, int max_points) {
  if (m > max_points)
    throw guard_error("symmetric group refused for " + std::to_string(m) + " points");
  return permutation_closure(permutations_of(m), m).group;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < a; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

FiniteMagma conjugation_rack(const FiniteGroup& g) {
  const int n = g.size();
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[a][b] = g.conj(a, b);
  return m;
}

FiniteMagma takasaki_quandle(const FiniteGroup& g) {
  if (!is_abelian(g)) throw precondition_error("Takasaki quandle needs an abelian group");
  const int n = g.size();
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[a][b] = g.mul(g.mul(a, a), g.inv(b));
  return m;
}

FiniteMagma alexander_quandle(const FiniteGroup& g, const SetMap& t) {
  if (!is_abelian(g)) throw precondition_error("Alexander quandle needs an abelian group");
  if (t.size != g.size() || !is_permutation(t) || !is_group_homomorphism(t, g, g))
    throw precondition_error("Alexander twist must be a group automorphism");
  const int n = g.size();
  FiniteMagma m{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m.table[a][b] = g.mul(g.mul(a, g.inv(t(a))), t(b));
  return m;
}

bool is_group_homomorphism(const SetMap& f, const FiniteGroup& g, const FiniteGroup& h) {
  if (f.size != g.size()) throw input_error("map domain does not match group");
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (f(g.mul(a, b)) != h.mul(f(a), f(b))) return false;
  return true;
}

}  // namespace avop
