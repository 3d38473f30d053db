#pragma once

#include <vector>

#include "avop/error.hpp"
#include "avop/rational.hpp"

namespace avop {

using Vec = std::vector<Rat>;

/// Dense rational matrix, row-major. Columns of a LinearMap are the images
/// of the source basis vectors: apply(v) = M v.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Rat& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Rat& at(int i, int j) const { return a[(size_t)i * cols + j]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static Mat eye(int n);
  Vec apply(const Vec& v) const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool is_zero() const;
};

/// A linear map is just a matrix with the column convention fixed.
using LinearMap = Mat;

/// Kronecker product; (A (x) B)(u (x) v) = Au (x) Bv with slot-major
/// flattening (i,j) -> i * B.rows + j.
Mat kron(const Mat& a, const Mat& b);

/// Reduced row echelon form of the stacked row vectors.
struct Rref {
  Mat m;                    // RREF rows (zero rows dropped)
  std::vector<int> pivots;  // pivot column per kept row, increasing
  int rank = 0;
};

Rref rref(const std::vector<Vec>& rows, int width);

/// A subspace W of Q^dim together with the canonical coordinates on the
/// quotient: classes are represented on the non-pivot ("complement")
/// standard basis vectors after reduction by the RREF of W.
struct Quotient {
  int ambient_dim = 0;
  Rref sub;                     // basis of W
  std::vector<int> complement;  // non-pivot column indices

  int dim() const { return (int)complement.size(); }
  /// Coordinates of the class of v in the complement basis.
  Vec project(const Vec& v) const;
  /// Canonical representative of a class given in complement coordinates.
  Vec lift(const Vec& cls) const;
  /// Membership of v in W.
  bool contains(const Vec& v) const;
};

Quotient quotient_by_span(const std::vector<Vec>& spanning, int dim);

/// Whether v lies in the row span (solved by reducing against the RREF).
bool in_row_span(const Rref& r, const Vec& v);

}  // namespace avop
