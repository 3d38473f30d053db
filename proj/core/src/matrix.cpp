#include "avop/matrix.hpp"

namespace avop {

Mat Mat::eye(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if ((int)v.size() != cols) throw input_error("matrix-vector size mismatch");
  Vec out(rows);
  for (int i = 0; i < rows; ++i) {
    Rat s;
    for (int j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw input_error("matrix product size mismatch");
  Mat m(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols; ++j)
        if (!o.at(k, j).is_zero()) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw input_error("matrix sum size mismatch");
  Mat m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw input_error("matrix difference size mismatch");
  Mat m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
  return m;
}

bool Mat::is_zero() const {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat m(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          m.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

Rref rref(const std::vector<Vec>& rows, int width) {
  std::vector<Vec> work;
  for (const Vec& r : rows) {
    if ((int)r.size() != width) throw input_error("rref row width mismatch");
    work.push_back(r);
  }
  Rref out;
  int lead = 0;
  size_t row = 0;
  for (; lead < width && row < work.size(); ++lead) {
    size_t pivot = row;
    while (pivot < work.size() && work[pivot][lead].is_zero()) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[row], work[pivot]);
    Rat inv = Rat(1) / work[row][lead];
    for (int j = 0; j < width; ++j) work[row][j] *= inv;
    for (size_t i = 0; i < work.size(); ++i) {
      if (i == row || work[i][lead].is_zero()) continue;
      Rat f = work[i][lead];
      for (int j = 0; j < width; ++j) work[i][j] -= f * work[row][j];
    }
    out.pivots.push_back(lead);
    ++row;
  }
  out.rank = (int)out.pivots.size();
  out.m = Mat(out.rank, width);
  for (int i = 0; i < out.rank; ++i)
    for (int j = 0; j < width; ++j) out.m.at(i, j) = work[i][j];
  return out;
}

bool in_row_span(const Rref& r, const Vec& v) {
  Vec w = v;
  for (int i = 0; i < r.rank; ++i) {
    int p = r.pivots[i];
    if (w[p].is_zero()) continue;
    Rat f = w[p];
    for (int j = 0; j < r.m.cols; ++j) w[j] -= f * r.m.at(i, j);
  }
  for (const Rat& x : w)
    if (!x.is_zero()) return false;
  return true;
}

Vec Quotient::project(const Vec& v) const {
  if ((int)v.size() != ambient_dim) throw input_error("projection size mismatch");
  Vec w = v;
  for (int i = 0; i < sub.rank; ++i) {
    int p = sub.pivots[i];
    if (w[p].is_zero()) continue;
    Rat f = w[p];
    for (int j = 0; j < ambient_dim; ++j) w[j] -= f * sub.m.at(i, j);
  }
  Vec out(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) out[i] = w[complement[i]];
  return out;
}

Vec Quotient::lift(const Vec& cls) const {
  if (cls.size() != complement.size()) throw input_error("lift size mismatch");
  Vec out(ambient_dim);
  for (size_t i = 0; i < complement.size(); ++i) out[complement[i]] = cls[i];
  return out;
}

bool Quotient::contains(const Vec& v) const { return in_row_span(sub, v); }

Quotient quotient_by_span(const std::vector<Vec>& spanning, int dim) {
  Quotient q;
  q.ambient_dim = dim;
  q.sub = rref(spanning, dim);
  size_t pi = 0;
  for (int j = 0; j < dim; ++j) {
    if (pi < q.sub.pivots.size() && q.sub.pivots[pi] == j) {
      ++pi;
      continue;
    }
    q.complement.push_back(j);
  }
  return q;
}

}  // namespace avop
