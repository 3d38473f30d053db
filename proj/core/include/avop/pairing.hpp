#pragma once

#include <vector>

#include "avop/averaging.hpp"
#include "avop/group.hpp"

namespace avop {

/// Two rack operations on one carrier with the left translations of the
/// second acting as rack automorphisms of the first:
/// x <#> (y <> z) = (x <#> y) <> (x <#> z).
struct RackPairing {
  FiniteMagma diamond;       // <>
  FiniteMagma blackdiamond;  // <#>
};

struct GroupRackCheck {
  bool ok = false;
  bool pointed = false;
  Witness why;
};

/// bd must be a rack whose left translations are group endomorphisms of g
/// (hence automorphisms). With `pointed`, the rack must also be pointed at
/// the group identity; the derived identity (x<#>y)^-1 = x<#>y^-1 is then
/// asserted as a consequence.
GroupRackCheck is_group_rack(const FiniteGroup& g, const FiniteMagma& bd, bool pointed = false);

bool is_rack_pairing(const FiniteMagma& diamond, const FiniteMagma& blackdiamond);
Check check_rack_pairing(const FiniteMagma& diamond, const FiniteMagma& blackdiamond);

/// All second operations <#> making (diamond, <#>) a rack-pairing, found by
/// scanning tables whose rows are permutations. Lexicographic by table.
std::vector<FiniteMagma> enumerate_pairing_partners(const FiniteMagma& diamond,
                                                    int max_size = 4);

struct PairingClass {
  bool lambda_homomorphic = false;
  bool lambda_antihomomorphic = false;
  bool symmetric = false;
};

PairingClass classify_pairing(const RackPairing& p);

bool is_pairing_morphism(const SetMap& f, const RackPairing& p, const RackPairing& q);

/// Two group structures on one carrier with the left skew-brace law
/// x * (y z) = (x * y) x^-1 (x * z); two_sided records the right-hand law.
struct SkewBrace {
  FiniteGroup dot;
  FiniteGroup bullet;
  bool two_sided = false;

  int size() const { return dot.size(); }
};

struct BraceResult {
  bool ok = false;
  SkewBrace brace;
  Witness why;
};

BraceResult validate_skew_brace(const FiniteMagma& dot, const FiniteMagma& bullet);
SkewBrace require_skew_brace(const FiniteMagma& dot, const FiniteMagma& bullet);

/// Theorem check: the three inverse identities hold in every two-sided skew
/// brace. Must return true on valid input; a false indicates a bug or an
/// invalid brace.
Check brace_lemma_check(const SkewBrace& b);

/// (dot-conjugation, bullet-conjugation); requires two_sided. Post-checked:
/// the result is a rack-pairing and (dot, bullet-conjugation) a group-rack.
RackPairing brace_to_pairing(const SkewBrace& b);

/// A averaging for the dot group AND the bullet group.
Check skew_brace_averaging(const SkewBrace& b, const SetMap& a);

/// The pairing (dot-descendent, bullet-descendent) of a pointed averaging
/// operator; refuses non-pointed operators.
RackPairing brace_averaging_pairing(const SkewBrace& b, const SetMap& a);

/// The holomorph rack on Aut(Q,<>) x Q with
/// (f,x) <> (g,y) = (f g f^-1, f(y)), flattened as f*|Q| + x.
struct Holomorph {
  std::vector<SetMap> aut;  // canonical (lexicographic) order
  FiniteMagma rack;

  int aut_index(const SetMap& f) const;  // -1 if absent
};

Holomorph holomorph(const FiniteMagma& q, int max_size = 6);

/// Regular subracks H (pi_2 restricted to H bijective) as sections: the
/// result rows assign to each x in Q the Aut-index f_x of the unique
/// (f_x, x) in H. Lexicographic over sections.
std::vector<std::vector<int>> enumerate_regular_subracks(const Holomorph& h);

/// x <#> y := f_x(y); realizes the holomorph classification theorem.
RackPairing pairing_from_subrack(const Holomorph& h, const FiniteMagma& q,
                                 const std::vector<int>& section);
/// The section x -> index of the left translation of <#>.
std::vector<int> subrack_from_pairing(const Holomorph& h, const RackPairing& p);

/// A rack <> plus an operation |> whose left translations are rack
/// automorphisms of <>, subject to weighted left-distributivity.
struct DiRack {
  FiniteMagma diamond;
  FiniteMagma tri;  // |>
};

Check check_dirack(const FiniteMagma& diamond, const FiniteMagma& tri);
bool is_dirack(const FiniteMagma& diamond, const FiniteMagma& tri);

/// Sub-adjacent construction x <#> y := x <> (x |> y).
RackPairing pairing_from_dirack(const DiRack& d);
/// Inverse construction x |> y := L_x^-1 (x <#> y).
DiRack dirack_from_pairing(const RackPairing& p);

bool is_dirack_morphism(const SetMap& f, const DiRack& d, const DiRack& e);

/// For complete <>: the unique A with x <#> y = A(x) <> y, post-verified
/// averaging with descendent rack equal to <#>.
SetMap recover_averaging(const RackPairing& p);

/// Each table a rack; each adjacent pair satisfies
/// x <>_i (y <>_{i-1} z) = (x <>_i y) <>_{i-1} (x <>_i z).
Check is_rack_k_pairing(const std::vector<FiniteMagma>& ops);

/// [<>, <>_A, <>_{A^2}, ..., <>_{A^k}] from an averaging operator.
std::vector<FiniteMagma> k_pairing_from_averaging(const FiniteMagma& q, const SetMap& a, int k);

}  // namespace avop
