#pragma once

#include <vector>

#include "avop/magma.hpp"

namespace avop {

/// A finite group as a Cayley table with cached identity and inverses.
/// Construct through validate_group / require_group so the caches are
/// always consistent with the table.
struct FiniteGroup {
  FiniteMagma magma;
  int identity = 0;
  std::vector<int> inverse;

  int size() const { return magma.size; }
  int mul(int a, int b) const { return magma.table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  bool operator==(const FiniteGroup& o) const { return magma == o.magma; }
};

struct GroupResult {
  bool ok = false;
  FiniteGroup group;
  Witness witness;  // violated axiom when !ok
};

/// Checks identity, inverses and associativity, returning the group with
/// caches filled in, or the violated axiom with a witness.
GroupResult validate_group(const FiniteMagma& m);

/// validate_group that throws precondition_error on failure.
FiniteGroup require_group(const FiniteMagma& m);

/// A left action phi[g][x] of a group on {0,...,m-1}.
struct GroupAction {
  FiniteGroup group;
  int set_size = 0;
  std::vector<std::vector<int>> phi;

  int act(int g, int x) const { return phi[g][x]; }
};

/// phi[e] = id, phi[gh] = phi[g] o phi[h], every phi[g] bijective.
Check validate_action(const GroupAction& a);

/// The adjoint action of G on itself, Ad_g h = g h g^-1.
GroupAction adjoint_action(const FiniteGroup& g);

/// All group automorphisms, lexicographic by image array. DFS over images
/// with partial-homomorphism propagation; refuses above the guard.
std::vector<SetMap> automorphism_group(const FiniteGroup& g, int max_size = 12);

/// The subgroup of Sym(n) generated by the given permutations, re-indexed
/// canonically (elements sorted by image array).
struct PermGroup {
  std::vector<SetMap> elements;
  FiniteGroup group;  // composition table over the canonical indexing

  int index_of(const SetMap& f) const;  // -1 if absent
};

PermGroup permutation_closure(const std::vector<SetMap>& gens, int n_points);

/// hom[g] must be an automorphism of H for each g, with hom[e] = id and
/// hom[g1 g2] = hom[g1] o hom[g2]. Elements are pairs (g,h) flattened as
/// g*|H| + h, multiplied by (g,h)(g',h') = (gg', h * hom[g](h')).
FiniteGroup semidirect_product(const FiniteGroup& g, const FiniteGroup& h,
                               const std::vector<SetMap>& hom);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

FiniteGroup cyclic_group(int n);
FiniteGroup klein_four_group();
/// Sym(m) on the m! permutations of m points, sorted lexicographically.
FiniteGroup symmetric_group(int m, int max_points = 5);
/// The m! permutations underlying symmetric_group, in the same order.
std::vector<SetMap> permutations_of(int m);

bool is_abelian(const FiniteGroup& g);

/// g <> h := g h g^-1, pointed at the identity.
FiniteMagma conjugation_rack(const FiniteGroup& g);
/// a <> b := 2a - b on an abelian group (a quandle).
FiniteMagma takasaki_quandle(const FiniteGroup& g);
/// a <> b := (a - t(a)) + t(b) on an abelian group with t an automorphism.
FiniteMagma alexander_quandle(const FiniteGroup& g, const SetMap& t);

bool is_group_homomorphism(const SetMap& f, const FiniteGroup& g, const FiniteGroup& h);

}  // namespace avop
