#pragma once

#include "avop/group.hpp"
#include "avop/matrix.hpp"

namespace avop {

/// Elements of the rational group algebra are coefficient vectors over the
/// group basis; tensor-square elements are n x n coefficient matrices
/// indexed by basis pairs.
struct GroupAlgebraElement {
  const FiniteGroup* group = nullptr;
  Vec coeffs;
};

/// Convolution product of coefficient vectors.
Vec ga_multiply(const FiniteGroup& g, const Vec& a, const Vec& b);
/// Delta(sum a_g g) = sum a_g (g (x) g) as an n x n matrix.
Mat ga_coproduct(const FiniteGroup& g, const Vec& a);
Rat ga_counit(const Vec& a);
/// S(sum a_g g) = sum a_g g^-1.
Vec ga_antipode(const FiniteGroup& g, const Vec& a);

/// The linear extension of a set map: basis permutation matrix columns.
LinearMap extend_operator(const FiniteGroup& g, const SetMap& a);

/// Coalgebra map (comultiplicative and counital on the basis) satisfying
/// B(x_(1)) B(y) S(B(x_(2))) = B(B(x_(1)) y S(B(x_(2)))) on basis pairs;
/// both sides are linear in each slot, so the basis suffices.
Check is_hopf_averaging(const FiniteGroup& g, const LinearMap& b);

struct RestrictResult {
  bool ok = false;
  SetMap map;
  int offending_basis = -1;  // basis element whose image is not group-like
};

/// For a coalgebra map B every B(g) is group-like, hence a group element;
/// returns the underlying set map or the offending basis element.
RestrictResult restrict_operator(const FiniteGroup& g, const LinearMap& b);

}  // namespace avop
