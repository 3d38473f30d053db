#include "avop/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace avop {

GroupRackCheck is_group_rack(const FiniteGroup& g, const FiniteMagma& bd, bool pointed) {
  if (g.size() != bd.size) throw input_error("group and rack live on different carriers");
  GroupRackCheck r;
  RackReport rack = validate_rack(bd);
  if (!rack.is_rack) {
    r.why = rack.witnesses.front();
    return r;
  }
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (bd.at(x, g.mul(y, z)) != g.mul(bd.at(x, y), bd.at(x, z))) {
          r.why = {"translation-endomorphism", {x, y, z}};
          return r;
        }
  r.ok = true;
  r.pointed = std::find(rack.pointed_elements.begin(), rack.pointed_elements.end(),
                        g.identity) != rack.pointed_elements.end();
  if (pointed) {
    if (!r.pointed) {
      r.ok = false;
      r.why = {"pointed-at-identity", {g.identity}};
      return r;
    }
    // Consequence of pointedness: (x <#> y)^-1 = x <#> y^-1.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (g.inv(bd.at(x, y)) != bd.at(x, g.inv(y)))
          throw internal_error("pointed group-rack inverse identity failed");
  }
  return r;
}

Check check_rack_pairing(const FiniteMagma& diamond, const FiniteMagma& blackdiamond) {
  if (diamond.size != blackdiamond.size)
    throw input_error("pairing operations live on different carriers");
  RackReport rd = validate_rack(diamond);
  if (!rd.is_rack) {
    Check c = Check::fail("diamond-" + rd.witnesses.front().axiom, rd.witnesses.front().where);
    return c;
  }
  RackReport rb = validate_rack(blackdiamond);
  if (!rb.is_rack) {
    Check c = Check::fail("blackdiamond-" + rb.witnesses.front().axiom, rb.witnesses.front().where);
    return c;
  }
  const int n = diamond.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (blackdiamond.at(x, diamond.at(y, z)) !=
            diamond.at(blackdiamond.at(x, y), blackdiamond.at(x, z)))
          return Check::fail("pairing-compatibility", {x, y, z});
  return {};
}

bool is_rack_pairing(const FiniteMagma& diamond, const FiniteMagma& blackdiamond) {
  return check_rack_pairing(diamond, blackdiamond).ok;
}

std::vector<FiniteMagma> enumerate_pairing_partners(const FiniteMagma& diamond, int max_size) {
  if (!is_rack(diamond)) throw precondition_error("pairing partners need a rack");
  const int n = diamond.size;
  if (n > max_size)
    throw guard_error("pairing partner enumeration refused for size " + std::to_string(n) +
                      " > " + std::to_string(max_size));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<FiniteMagma> out;
  std::vector<int> rows(n, 0);
  while (true) {
    FiniteMagma bd{n, {}, {}};
    for (int x = 0; x < n; ++x) bd.table.push_back(perms[rows[x]]);
    if (is_rack_pairing(diamond, bd)) out.push_back(bd);
    int i = n - 1;
    while (i >= 0 && rows[i] == (int)perms.size() - 1) rows[i--] = 0;
    if (i < 0) break;
    ++rows[i];
  }
  return out;
}

PairingClass classify_pairing(const RackPairing& p) {
  const int n = p.diamond.size;
  PairingClass c;
  c.lambda_homomorphic = c.lambda_antihomomorphic = c.symmetric = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SetMap lx = left_translation(p.blackdiamond, x);
      SetMap ly = left_translation(p.blackdiamond, y);
      SetMap conj = compose(compose(lx, ly), inverse_permutation(lx));
      if (!(left_translation(p.blackdiamond, p.diamond.at(x, y)) == conj))
        c.lambda_homomorphic = false;
      if (!(left_translation(p.blackdiamond, p.diamond.at(y, x)) == conj))
        c.lambda_antihomomorphic = false;
    }
  // Symmetric == (Q, <#>, <>) is itself a rack-pairing.
  for (int x = 0; x < n && c.symmetric; ++x)
    for (int y = 0; y < n && c.symmetric; ++y)
      for (int z = 0; z < n; ++z)
        if (p.diamond.at(x, p.blackdiamond.at(y, z)) !=
            p.blackdiamond.at(p.diamond.at(x, y), p.diamond.at(x, z))) {
          c.symmetric = false;
          break;
        }
  return c;
}

bool is_pairing_morphism(const SetMap& f, const RackPairing& p, const RackPairing& q) {
  return is_rack_homomorphism(f, p.diamond, q.diamond) &&
         is_rack_homomorphism(f, p.blackdiamond, q.blackdiamond);
}

BraceResult validate_skew_brace(const FiniteMagma& dot, const FiniteMagma& bullet) {
  BraceResult r;
  GroupResult gd = validate_group(dot);
  if (!gd.ok) {
    r.why = {"dot-" + gd.witness.axiom, gd.witness.where};
    return r;
  }
  GroupResult gb = validate_group(bullet);
  if (!gb.ok) {
    r.why = {"bullet-" + gb.witness.axiom, gb.witness.where};
    return r;
  }
  if (gd.group.identity != gb.group.identity) {
    r.why = {"shared-identity", {gd.group.identity, gb.group.identity}};
    return r;
  }
  const FiniteGroup &d = gd.group, &b = gb.group;
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (b.mul(x, d.mul(y, z)) !=
            d.mul(d.mul(b.mul(x, y), d.inv(x)), b.mul(x, z))) {
          r.why = {"left-brace-law", {x, y, z}};
          return r;
        }
  r.ok = true;
  r.brace = SkewBrace{d, b, true};
  for (int x = 0; x < n && r.brace.two_sided; ++x)
    for (int y = 0; y < n && r.brace.two_sided; ++y)
      for (int z = 0; z < n; ++z)
        if (b.mul(d.mul(x, y), z) !=
            d.mul(d.mul(b.mul(x, z), d.inv(z)), b.mul(y, z))) {
          r.brace.two_sided = false;
          break;
        }
  return r;
}

SkewBrace require_skew_brace(const FiniteMagma& dot, const FiniteMagma& bullet) {
  BraceResult r = validate_skew_brace(dot, bullet);
  if (!r.ok) throw precondition_error("not a skew brace: " + r.why.axiom + " fails");
  return r.brace;
}

Check brace_lemma_check(const SkewBrace& br) {
  if (!br.two_sided) throw precondition_error("lemma check needs a two-sided skew brace");
  const FiniteGroup &d = br.dot, &b = br.bullet;
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (b.mul(d.mul(x, d.inv(y)), z) !=
            d.mul(d.mul(b.mul(x, z), d.inv(b.mul(y, z))), z))
          return Check::fail("lemma-i", {x, y, z});
        if (b.mul(d.mul(d.inv(x), y), z) !=
            d.mul(d.mul(z, d.inv(b.mul(x, z))), b.mul(y, z)))
          return Check::fail("lemma-ii", {x, y, z});
      }
  for (int x = 0; x < n; ++x) {
    int lhs = d.mul(d.mul(d.inv(x), b.mul(d.inv(b.inv(x)), x)), d.inv(x));
    if (lhs != d.identity) return Check::fail("lemma-iii", {x});
  }
  return {};
}

RackPairing brace_to_pairing(const SkewBrace& br) {
  if (!br.two_sided) throw precondition_error("conjugation pairing needs a two-sided brace");
  const int n = br.size();
  RackPairing p;
  p.diamond = conjugation_rack(br.dot);
  p.blackdiamond = FiniteMagma{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p.blackdiamond.table[x][y] = br.bullet.mul(br.bullet.mul(x, y), br.bullet.inv(x));
  GroupRackCheck gr = is_group_rack(br.dot, p.blackdiamond, true);
  if (!gr.ok) throw internal_error("brace conjugation is not a group-rack: " + gr.why.axiom);
  if (!is_rack_pairing(p.diamond, p.blackdiamond))
    throw internal_error("brace conjugation is not a rack-pairing");
  return p;
}

Check skew_brace_averaging(const SkewBrace& br, const SetMap& a) {
  Check cd = is_averaging(br.dot, a);
  if (!cd) return Check::fail("dot-averaging", cd.witness.where);
  Check cb = is_averaging(br.bullet, a);
  if (!cb) return Check::fail("bullet-averaging", cb.witness.where);
  return {};
}

RackPairing brace_averaging_pairing(const SkewBrace& br, const SetMap& a) {
  if (!br.two_sided) throw precondition_error("averaging pairing needs a two-sided brace");
  Check c = skew_brace_averaging(br, a);
  if (!c) throw precondition_error("operator is not brace-averaging: " + c.witness.axiom);
  if (a(br.dot.identity) != br.dot.identity)
    throw precondition_error("averaging pairing needs a pointed operator");
  RackPairing p{descendent_rack(br.dot, a), descendent_rack(br.bullet, a)};
  if (!is_rack_pairing(p.diamond, p.blackdiamond))
    throw internal_error("brace averaging pairing failed compatibility");
  return p;
}

int Holomorph::aut_index(const SetMap& f) const {
  auto it = std::lower_bound(aut.begin(), aut.end(), f);
  if (it == aut.end() || !(*it == f)) return -1;
  return (int)(it - aut.begin());
}

Holomorph holomorph(const FiniteMagma& q, int max_size) {
  if (!is_rack(q)) throw precondition_error("holomorph needs a rack");
  Holomorph h;
  h.aut = rack_automorphism_group(q, max_size);
  const int k = (int)h.aut.size(), n = q.size, sz = k * n;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[h.aut[i].image] = i;
  h.rack = FiniteMagma{sz, std::vector<std::vector<int>>(sz, std::vector<int>(sz))};
  for (int f = 0; f < k; ++f)
    for (int x = 0; x < n; ++x)
      for (int g = 0; g < k; ++g)
        for (int y = 0; y < n; ++y) {
          SetMap conj = compose(compose(h.aut[f], h.aut[g]), inverse_permutation(h.aut[f]));
          h.rack.table[f * n + x][g * n + y] = index.at(conj.image) * n + h.aut[f](y);
        }
  return h;
}

std::vector<std::vector<int>> enumerate_regular_subracks(const Holomorph& h) {
  const int k = (int)h.aut.size();
  const int n = h.rack.size / std::max(k, 1);
  std::vector<std::vector<int>> out;
  std::vector<int> section(n, 0);
  // Regularity forces one automorphism per carrier point, so only sections
  // of pi_2 are searched. Closure: (f_x, x) <> (f_y, y) = (f_x f_y f_x^-1, f_x(y))
  // must again be a section member, i.e. f_{f_x(y)} = f_x f_y f_x^-1.
  auto closed = [&](const std::vector<int>& s) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int p = h.rack.table[s[x] * n + x][s[y] * n + y];
        if (s[p % n] != p / n) return false;
      }
    return true;
  };
  while (true) {
    if (closed(section)) out.push_back(section);
    int i = n - 1;
    while (i >= 0 && section[i] == k - 1) section[i--] = 0;
    if (i < 0) break;
    ++section[i];
  }
  return out;
}

RackPairing pairing_from_subrack(const Holomorph& h, const FiniteMagma& q,
                                 const std::vector<int>& section) {
  const int n = q.size;
  if ((int)section.size() != n) throw input_error("section has wrong length");
  RackPairing p;
  p.diamond = q;
  p.blackdiamond = FiniteMagma{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p.blackdiamond.table[x][y] = h.aut[section[x]](y);
  if (!is_rack_pairing(p.diamond, p.blackdiamond))
    throw internal_error("regular subrack did not induce a rack-pairing");
  return p;
}

std::vector<int> subrack_from_pairing(const Holomorph& h, const RackPairing& p) {
  const int n = p.diamond.size;
  std::vector<int> section(n);
  for (int x = 0; x < n; ++x) {
    int idx = h.aut_index(left_translation(p.blackdiamond, x));
    if (idx < 0)
      throw precondition_error("blackdiamond translation of " + std::to_string(x) +
                               " is not an automorphism of diamond");
    section[x] = idx;
  }
  return section;
}

Check check_dirack(const FiniteMagma& diamond, const FiniteMagma& tri) {
  if (diamond.size != tri.size) throw input_error("di-rack operations on different carriers");
  RackReport rd = validate_rack(diamond);
  if (!rd.is_rack)
    return Check::fail("diamond-" + rd.witnesses.front().axiom, rd.witnesses.front().where);
  const int n = diamond.size;
  for (int x = 0; x < n; ++x)
    if (!is_permutation(left_translation(tri, x)))
      return Check::fail("tri-translation-bijective", {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (tri.at(x, diamond.at(y, z)) != diamond.at(tri.at(x, y), tri.at(x, z)))
          return Check::fail("tri-translation-automorphism", {x, y, z});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (diamond.at(x, tri.at(x, tri.at(y, z))) !=
            tri.at(diamond.at(x, tri.at(x, y)), diamond.at(x, tri.at(x, z))))
          return Check::fail("weighted-left-distributivity", {x, y, z});
  return {};
}

bool is_dirack(const FiniteMagma& diamond, const FiniteMagma& tri) {
  return check_dirack(diamond, tri).ok;
}

RackPairing pairing_from_dirack(const DiRack& d) {
  Check c = check_dirack(d.diamond, d.tri);
  if (!c) throw precondition_error("invalid di-rack: " + c.witness.axiom);
  const int n = d.diamond.size;
  RackPairing p;
  p.diamond = d.diamond;
  p.blackdiamond = FiniteMagma{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      p.blackdiamond.table[x][y] = d.diamond.at(x, d.tri.at(x, y));
  if (!is_rack_pairing(p.diamond, p.blackdiamond))
    throw internal_error("sub-adjacent construction failed");
  return p;
}

DiRack dirack_from_pairing(const RackPairing& p) {
  Check c = check_rack_pairing(p.diamond, p.blackdiamond);
  if (!c) throw precondition_error("invalid rack-pairing: " + c.witness.axiom);
  const int n = p.diamond.size;
  DiRack d;
  d.diamond = p.diamond;
  d.tri = FiniteMagma{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x) {
    SetMap linv = inverse_permutation(left_translation(p.diamond, x));
    for (int y = 0; y < n; ++y) d.tri.table[x][y] = linv(p.blackdiamond.at(x, y));
  }
  Check dc = check_dirack(d.diamond, d.tri);
  if (!dc) throw internal_error("pairing did not induce a di-rack: " + dc.witness.axiom);
  return d;
}

bool is_dirack_morphism(const SetMap& f, const DiRack& d, const DiRack& e) {
  return is_rack_homomorphism(f, d.diamond, e.diamond) &&
         is_rack_homomorphism(f, d.tri, e.tri);
}

SetMap recover_averaging(const RackPairing& p) {
  Check c = check_rack_pairing(p.diamond, p.blackdiamond);
  if (!c) throw precondition_error("invalid rack-pairing: " + c.witness.axiom);
  const int n = p.diamond.size;
  // Uniqueness of A needs distinct elements to have distinct left
  // translations. Column-complete racks have this (cancel at any point);
  // conjugation racks of centerless groups have it too, which is the case
  // the complete-group analogy points at.
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1 + 1; c2 < n; ++c2)
      if (p.diamond.table[c1] == p.diamond.table[c2])
        throw precondition_error(
            "recovery needs a complete diamond rack: elements " + std::to_string(c1) +
            " and " + std::to_string(c2) + " share a left translation");
  SetMap a{n, std::vector<int>(n)};
  for (int x = 0; x < n; ++x) {
    int cand = -1;
    for (int s = 0; s < n; ++s)
      if (p.diamond.table[s] == p.blackdiamond.table[x]) { cand = s; break; }
    if (cand < 0)
      throw precondition_error("no element of the diamond rack realizes the translation of " +
                               std::to_string(x));
    a.image[x] = cand;
  }
  if (!is_averaging(p.diamond, a))
    throw internal_error("recovered operator is not averaging");
  if (!(descendent_rack(p.diamond, a) == p.blackdiamond))
    throw internal_error("recovered operator has the wrong descendent rack");
  return a;
}

Check is_rack_k_pairing(const std::vector<FiniteMagma>& ops) {
  if (ops.empty()) throw input_error("rack k-pairing needs at least one operation");
  const int n = ops.front().size;
  for (size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].size != n) throw input_error("rack k-pairing operations on different carriers");
    RackReport r = validate_rack(ops[i]);
    if (!r.is_rack) {
      std::vector<int> w{(int)i};
      auto& ww = r.witnesses.front().where;
      w.insert(w.end(), ww.begin(), ww.end());
      return Check::fail("level-rack", w);
    }
  }
  for (size_t i = 1; i < ops.size(); ++i)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (ops[i].at(x, ops[i - 1].at(y, z)) !=
              ops[i - 1].at(ops[i].at(x, y), ops[i].at(x, z)))
            return Check::fail("level-compatibility", {(int)i, x, y, z});
  return {};
}

std::vector<FiniteMagma> k_pairing_from_averaging(const FiniteMagma& q, const SetMap& a, int k) {
  if (!is_averaging(q, a))
    throw precondition_error("rack k-pairing construction needs an averaging operator");
  const int n = q.size;
  std::vector<FiniteMagma> ops;
  SetMap pw = identity_map(n);
  for (int i = 0; i <= k; ++i) {
    FiniteMagma t{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t.table[x][y] = q.at(pw(x), y);
    ops.push_back(std::move(t));
    pw = compose(a, pw);
  }
  Check c = is_rack_k_pairing(ops);
  if (!c) throw internal_error("averaging powers failed the k-pairing law: " + c.witness.axiom);
  return ops;
}

}  // namespace avop
