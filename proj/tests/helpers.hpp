#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "avop/algebra.hpp"
#include "avop/group.hpp"
#include "avop/magma.hpp"

namespace avop::test {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// One group per isomorphism class of order <= 6.
std::vector<NamedGroup> groups_up_to_6();

/// All labeled rack tables on n elements (rows chosen among permutations,
/// then filtered by left-distributivity).
std::vector<FiniteMagma> all_labeled_racks(int n);

/// All magma tables of size n via an odometer over entries; n^(n^2) tables.
void for_each_table(int n, const std::function<void(const FiniteMagma&)>& fn);

/// All maps {0..n-1} -> {0..n-1} in lexicographic order.
void for_each_map(int n, const std::function<void(const SetMap&)>& fn);

/// Unpruned enumeration oracle: filters every map by a direct evaluation of
/// the rack averaging identity (independent of the library search path).
std::vector<SetMap> oracle_enumerate_rack(const FiniteMagma& q);
std::vector<SetMap> oracle_enumerate_group(const FiniteGroup& g);

/// Brute-force bijection search.
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Deterministic small rationals, entries num in [-bound, bound], den in {1,2}.
struct RatGen {
  std::mt19937 rng;
  explicit RatGen(unsigned seed) : rng(seed) {}
  Rat next(int bound = 3);
  Vec vec(int dim, int bound = 3);
  Mat matrix(int rows, int cols, int bound = 3);
  Mat invertible(int n, int bound = 3);
};

/// Structure constants in a new basis: columns of t are the new basis
/// vectors; bracket'(x,y) = t^-1 bracket(t x, t y).
StructureConstants change_basis(const StructureConstants& sc, const Mat& t, const Mat& t_inv);
Mat invert(const Mat& t);

}  // namespace avop::test
