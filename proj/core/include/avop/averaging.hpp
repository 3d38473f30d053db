#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "avop/group.hpp"

namespace avop {

/// A carrier together with a verified averaging operator on it.
struct AveragingContext {
  std::variant<FiniteGroup, FiniteMagma> carrier;
  SetMap op;
  bool pointed = false;  // operator fixes the distinguished element
};

/// A(g) A(h) A(g)^-1 = A(A(g) h A(g)^-1) for all pairs.
Check is_averaging(const FiniteGroup& g, const SetMap& a);
/// A(x) <> A(y) = A(A(x) <> y) for all pairs.
Check is_averaging(const FiniteMagma& rack, const SetMap& a);

struct EnumOptions {
  bool pointed_only = false;
  std::optional<int> pointed_at;  // racks: element the operator must fix
  int max_size = 8;
  bool parallel = true;  // partition the top-level branch across workers
};

/// Exactly the maps passing is_averaging, in lexicographic image order.
/// Depth-first with constraint propagation: once A(x), A(y) are known the
/// identity pins A at the point A(x)<>y (resp. A(x)hA(x)^-1).
std::vector<SetMap> enumerate_averaging(const FiniteGroup& g, const EnumOptions& opt = {});
std::vector<SetMap> enumerate_averaging(const FiniteMagma& rack, const EnumOptions& opt = {});

/// g <>_A h := A(g) h A(g)^-1. Requires A averaging.
FiniteMagma descendent_rack(const FiniteGroup& g, const SetMap& a);
/// x <>_A y := A(x) <> y. Requires A averaging.
FiniteMagma descendent_rack(const FiniteMagma& rack, const SetMap& a);

/// (g1,g) <> (h1,h) = (g1 h1 g1^-1, g1 h g1^-1) on pairs, index g*n + h.
FiniteMagma adjoint_pair_rack(const FiniteGroup& g);
/// (g,x) <> (h,y) = (g h g^-1, phi_g y) on pairs, index g*m + x.
FiniteMagma action_pair_rack(const GroupAction& act);
/// The adjoint pair rack transported along xi_A(g,h) = (A(h)g, h); defined
/// for any map A, averaging not required.
FiniteMagma transported_pair_rack(const FiniteGroup& g, const SetMap& a);

struct GraphCheck {
  bool graph_is_subrack = false;        // Gr(A) inside the adjoint pair rack
  bool axis_is_subrack = false;         // {e} x G inside the transported rack
};

/// Both subrack criteria for the same map; each must agree with is_averaging.
GraphCheck graph_check(const FiniteGroup& g, const SetMap& a);

/// B(x) B(y) B(x)^-1 = B(phi_{B(x)} y) for a map B : X -> G.
Check is_relative_averaging(const GroupAction& act, const SetMap& b);
/// x <>_B y := phi_{B(x)} y.
FiniteMagma descendent_relative(const GroupAction& act, const SetMap& b);
/// Gr(B) = {(B(x),x)} closed inside the action pair rack.
bool relative_graph_check(const GroupAction& act, const SetMap& b);

/// A rack action of Q on X: every phi_x bijective and
/// phi_x phi_y = phi_{x <> y} phi_x.
struct RackAction {
  FiniteMagma rack;
  int set_size = 0;
  std::vector<std::vector<int>> phi;

  int act(int x, int u) const { return phi[x][u]; }
};

Check validate_rack_module(const RackAction& act);

/// Relative averaging for racks: A : R -> Q with
/// A(u) <>_Q A(v) = A(phi_{A(u)} v), where Q acts on the rack R by rack
/// automorphisms. Validates the action and the automorphism property first.
Check is_relative_averaging_rack(const RackAction& act, const FiniteMagma& target_rack,
                                 const SetMap& a);
/// u <>_A v := phi_{A(u)} v.
FiniteMagma descendent_relative_rack(const RackAction& act, const SetMap& a);

struct PowerHierarchy {
  std::vector<FiniteMagma> tables;  // tables[k] is <>_{A^k}, k = 0..kmax+lmax
  Check report;                     // aggregate of the four hierarchy claims
};

/// Builds <>_{A^k} for 0 <= k <= kmax+lmax and verifies: A^k averaging on Q
/// and on every (Q, <>_{A^l}); the composite identity
/// (<>_{A^l})_{A^k} = <>_{A^{k+l}} tablewise; every (Q, <>_{A^k}, <>_{A^{k+l}})
/// is a rack-pairing.
PowerHierarchy power_hierarchy(const FiniteMagma& rack, const SetMap& a, int kmax, int lmax);

/// C(g h g^-1) = g C(h) g^-1 for all pairs.
bool is_ad_invariant_map(const FiniteGroup& g, const SetMap& c);

/// Result of embedding a pointed group-rack into an averaging group.
struct GroupRackEmbedding {
  PermGroup inner;       // group generated by the left translations of <>
  FiniteGroup product;   // inner x G with the semidirect composition
  SetMap averaging;      // (L, y) -> (L_y, e), verified averaging on product
  SetMap inclusion;      // x -> (Id, x), verified group-rack morphism
};

/// Requires (G,.,<>) to be a pointed group-rack (every left translation of
/// <> a group endomorphism, rack pointed at the identity). Post-verified:
/// the operator is averaging, the inclusion is injective and intertwines
/// both operations.
GroupRackEmbedding embed_group_rack(const FiniteGroup& g, const FiniteMagma& blackdiamond);

}  // namespace avop
