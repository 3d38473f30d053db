#pragma once

#include "avop/magma.hpp"

namespace avop {

/// A map r : X x X -> X x X on a finite set, r(x,y) = (first[x][y], second[x][y]).
struct SetSolution {
  int size = 0;
  std::vector<std::vector<int>> first;
  std::vector<std::vector<int>> second;

  std::pair<int, int> r(int x, int y) const { return {first[x][y], second[x][y]}; }
};

void require_well_formed(const SetSolution& s);

/// The braid identity (Id x r)(r x Id)(Id x r) = (r x Id)(Id x r)(r x Id)
/// on all triples; witness is the first failing triple.
Check is_ybe_solution(const SetSolution& s);

/// Bijectivity of r on pairs. Reported separately: the braided-set
/// definition does not require it.
bool is_invertible(const SetSolution& s);

/// r(x,y) = (x <> y, x). Requires every left translation bijective; the
/// result satisfies the braid identity iff the operation is a rack.
SetSolution braided_from_rack(const FiniteMagma& q);

/// r(A x, A y) = (A x Id) r(A x, y) on all pairs.
Check is_braided_averaging(const SetSolution& s, const SetMap& a);

}  // namespace avop
