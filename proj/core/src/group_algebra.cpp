#include "avop/group_algebra.hpp"

namespace avop {

Vec ga_multiply(const FiniteGroup& g, const Vec& a, const Vec& b) {
  const int n = g.size();
  if ((int)a.size() != n || (int)b.size() != n) throw input_error("element size mismatch");
  Vec out(n);
  for (int x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < n; ++y)
      if (!b[y].is_zero()) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

Mat ga_coproduct(const FiniteGroup& g, const Vec& a) {
  const int n = g.size();
  if ((int)a.size() != n) throw input_error("element size mismatch");
  Mat m(n, n);
  for (int x = 0; x < n; ++x) m.at(x, x) = a[x];
  return m;
}

Rat ga_counit(const Vec& a) {
  Rat s;
  for (const Rat& x : a) s += x;
  return s;
}

Vec ga_antipode(const FiniteGroup& g, const Vec& a) {
  const int n = g.size();
  if ((int)a.size() != n) throw input_error("element size mismatch");
  Vec out(n);
  for (int x = 0; x < n; ++x) out[g.inv(x)] = a[x];
  return out;
}

LinearMap extend_operator(const FiniteGroup& g, const SetMap& a) {
  const int n = g.size();
  if (a.size != n) throw input_error("operator size does not match group");
  LinearMap b(n, n);
  for (int x = 0; x < n; ++x) {
    int v = a(x);
    if (v < 0 || v >= n) throw input_error("operator image out of range");
    b.at(v, x) = 1;
  }
  return b;
}

namespace {

Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Coalgebra map on the basis: Delta(B(g)) = (B (x) B) Delta(g) and
// eps(B(g)) = eps(g) = 1. In matrix terms diag(beta) = beta beta^T and
// sum(beta) = 1 for each column beta of B.
bool is_coalgebra_map(const FiniteGroup& g, const LinearMap& b) {
  const int n = g.size();
  for (int col = 0; col < n; ++col) {
    Rat sum;
    for (int i = 0; i < n; ++i) {
      sum += b.at(i, col);
      for (int j = 0; j < n; ++j) {
        Rat lhs = (i == j) ? b.at(i, col) : Rat(0);
        if (lhs != b.at(i, col) * b.at(j, col)) return false;
      }
    }
    if (sum != Rat(1)) return false;
  }
  return true;
}

}  // namespace

Check is_hopf_averaging(const FiniteGroup& g, const LinearMap& b) {
  const int n = g.size();
  if (b.rows != n || b.cols != n) throw input_error("operator dimension mismatch");
  if (!is_coalgebra_map(g, b)) return Check::fail("coalgebra-map", {});
  for (int x = 0; x < n; ++x) {
    // x is a basis element, so x_(1) = x_(2) = x.
    Vec bx = b.apply(basis_vec(n, x));
    Vec sbx = ga_antipode(g, bx);
    for (int y = 0; y < n; ++y) {
      Vec by = b.apply(basis_vec(n, y));
      Vec lhs = ga_multiply(g, ga_multiply(g, bx, by), sbx);
      Vec inner = ga_multiply(g, ga_multiply(g, bx, basis_vec(n, y)), sbx);
      Vec rhs = b.apply(inner);
      if (lhs != rhs) return Check::fail("hopf-averaging-identity", {x, y});
    }
  }
  return {};
}

RestrictResult restrict_operator(const FiniteGroup& g, const LinearMap& b) {
  const int n = g.size();
  if (b.rows != n || b.cols != n) throw input_error("operator dimension mismatch");
  RestrictResult r;
  r.map = SetMap{n, std::vector<int>(n, -1)};
  for (int col = 0; col < n; ++col) {
    int hit = -1;
    bool group_like = true;
    for (int i = 0; i < n; ++i) {
      if (b.at(i, col).is_zero()) continue;
      if (hit >= 0 || b.at(i, col) != Rat(1)) {
        group_like = false;
        break;
      }
      hit = i;
    }
    if (!group_like || hit < 0) {
      r.offending_basis = col;
      return r;
    }
    r.map.image[col] = hit;
  }
  r.ok = true;
  return r;
}

}  // namespace avop
