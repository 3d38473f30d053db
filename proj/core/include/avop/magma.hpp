#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avop/error.hpp"

namespace avop {

/// A binary operation on {0,...,n-1} as a Cayley table. Rows are left
/// operands: table[x][y] = x <> y. Carrier for racks, quandles and group
/// multiplication alike; which axioms hold is decided by the validators.
struct FiniteMagma {
  int size = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;  // optional display names

  int at(int x, int y) const { return table[x][y]; }
  bool operator==(const FiniteMagma& o) const {
    return size == o.size && table == o.table;
  }
};

/// A total map on {0,...,n-1} stored as its image array. Doubles as a
/// permutation when the image is bijective.
struct SetMap {
  int size = 0;  // domain size; codomain is given by context
  std::vector<int> image;

  int operator()(int x) const { return image[x]; }
  bool operator==(const SetMap& o) const { return image == o.image; }
  bool operator<(const SetMap& o) const { return image < o.image; }
};

SetMap identity_map(int n);
bool is_permutation(const SetMap& f);
SetMap compose(const SetMap& f, const SetMap& g);  // x -> f(g(x))
SetMap inverse_permutation(const SetMap& f);
SetMap power_of(const SetMap& f, int k);

/// One failed axiom instance: the axiom's name plus the elements at which
/// it fails, in the quantifier order of the definition.
struct Witness {
  std::string axiom;
  std::vector<int> where;
};

/// Boolean verdict plus the first counterexample found (empty when ok).
struct Check {
  bool ok = true;
  Witness witness;

  explicit operator bool() const { return ok; }
  static Check fail(std::string axiom, std::vector<int> where) {
    return Check{false, {std::move(axiom), std::move(where)}};
  }
};

struct RackReport {
  bool is_rack = false;
  bool is_quandle = false;
  std::vector<int> pointed_elements;
  std::vector<Witness> witnesses;  // first counterexample per violated axiom
};

/// Throws input_error naming the offending cell if a table entry is out of range.
void require_well_formed(const FiniteMagma& m);

/// Checks the two rack axioms (left-distributivity; every left translation
/// bijective), the quandle axiom and pointedness. If `pointed_at` is given,
/// a failure of pointedness at that element is recorded as a witness.
RackReport validate_rack(const FiniteMagma& m, std::optional<int> pointed_at = std::nullopt);

bool is_rack(const FiniteMagma& m);

/// Left translation row of x as a map.
SetMap left_translation(const FiniteMagma& m, int x);

/// x <> y := y.
FiniteMagma trivial_rack(int n);
/// 1-based a_i <> a_j = a_{n-j+1}; 0-based x <> y = n-1-y. A rack, not a quandle.
FiniteMagma flip_rack(int n);

/// f(x <> y) = f(x) <>' f(y) for all pairs. Sizes must line up with the carriers.
bool is_rack_homomorphism(const SetMap& f, const FiniteMagma& q, const FiniteMagma& q2);

/// S is closed under the operation.
bool is_subrack(const std::vector<int>& subset, const FiniteMagma& q);

/// Every column map c -> c <> x is a permutation (unique left divisors).
bool is_complete_rack(const FiniteMagma& q);

/// All bijections f with f(x <> y) = f(x) <> f(y), in lexicographic image
/// order. Brute-force permutation filter; refuses above the guard.
std::vector<SetMap> rack_automorphism_group(const FiniteMagma& q, int max_size = 6);

}  // namespace avop
