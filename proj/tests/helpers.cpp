#include "helpers.hpp"

#include <numeric>

#include "avop/error.hpp"

namespace avop::test {

std::vector<NamedGroup> groups_up_to_6() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 6; ++n) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"V4", klein_four_group()});
  out.push_back({"S3", symmetric_group(3)});
  return out;
}

std::vector<FiniteMagma> all_labeled_racks(int n) {
  std::vector<SetMap> perms = permutations_of(n);
  std::vector<FiniteMagma> out;
  std::vector<int> choice(n, 0);
  while (true) {
    FiniteMagma m{n, {}, {}};
    for (int x = 0; x < n; ++x) m.table.push_back(perms[choice[x]].image);
    bool dist = true;
    for (int x = 0; x < n && dist; ++x)
      for (int y = 0; y < n && dist; ++y)
        for (int z = 0; z < n; ++z)
          if (m.at(x, m.at(y, z)) != m.at(m.at(x, y), m.at(x, z))) {
            dist = false;
            break;
          }
    if (dist) out.push_back(std::move(m));
    int i = n - 1;
    while (i >= 0 && choice[i] == (int)perms.size() - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

void for_each_table(int n, const std::function<void(const FiniteMagma&)>& fn) {
  std::vector<int> flat(n * n, 0);
  while (true) {
    FiniteMagma m{n, {}, {}};
    for (int x = 0; x < n; ++x)
      m.table.emplace_back(flat.begin() + x * n, flat.begin() + (x + 1) * n);
    fn(m);
    int i = n * n - 1;
    while (i >= 0 && flat[i] == n - 1) flat[i--] = 0;
    if (i < 0) break;
    ++flat[i];
  }
}

void for_each_map(int n, const std::function<void(const SetMap&)>& fn) {
  std::vector<int> img(n, 0);
  while (true) {
    fn(SetMap{n, img});
    int i = n - 1;
    while (i >= 0 && img[i] == n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
}

std::vector<SetMap> oracle_enumerate_rack(const FiniteMagma& q) {
  std::vector<SetMap> out;
  for_each_map(q.size, [&](const SetMap& a) {
    for (int x = 0; x < q.size; ++x)
      for (int y = 0; y < q.size; ++y)
        if (q.table[a.image[x]][a.image[y]] != a.image[q.table[a.image[x]][y]]) return;
    out.push_back(a);
  });
  return out;
}

std::vector<SetMap> oracle_enumerate_group(const FiniteGroup& g) {
  std::vector<SetMap> out;
  for_each_map(g.size(), [&](const SetMap& a) {
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y) {
        int ax = a.image[x], ay = a.image[y];
        int lhs = g.mul(g.mul(ax, ay), g.inv(ax));
        int rhs = a.image[g.mul(g.mul(ax, y), g.inv(ax))];
        if (lhs != rhs) return;
      }
    out.push_back(a);
  });
  return out;
}

namespace {

bool iso_dfs(const FiniteGroup& g, const FiniteGroup& h, std::vector<int>& img,
             std::vector<char>& used, int pos) {
  const int n = g.size();
  while (pos < n && img[pos] >= 0) ++pos;
  if (pos == n) return true;
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    // partial homomorphism check against already-assigned elements
    img[pos] = v;
    used[v] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (img[a] < 0) continue;
      int p1 = g.mul(a, pos), p2 = g.mul(pos, a);
      if (img[p1] >= 0 && img[p1] != h.mul(img[a], v)) ok = false;
      if (img[p2] >= 0 && img[p2] != h.mul(v, img[a])) ok = false;
    }
    if (ok && iso_dfs(g, h, img, used, pos + 1)) return true;
    img[pos] = -1;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.size() != h.size()) return false;
  std::vector<int> img(g.size(), -1);
  std::vector<char> used(g.size(), 0);
  img[g.identity] = h.identity;
  used[h.identity] = 1;
  bool found = iso_dfs(g, h, img, used, 0);
  if (!found) return false;
  // the dfs checks partial products only; confirm fully
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (img[g.mul(a, b)] != h.mul(img[a], img[b])) return false;
  return true;
}

Rat RatGen::next(int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  return Rat(num(rng), den(rng));
}

Vec RatGen::vec(int dim, int bound) {
  Vec v(dim);
  for (Rat& x : v) x = next(bound);
  return v;
}

Mat RatGen::matrix(int rows, int cols, int bound) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = next(bound);
  return m;
}

Mat RatGen::invertible(int n, int bound) {
  while (true) {
    Mat m = matrix(n, n, bound);
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i) {
      Vec r(n);
      for (int j = 0; j < n; ++j) r[j] = m.at(i, j);
      rows.push_back(r);
    }
    if (rref(rows, n).rank == n) return m;
  }
}

Mat invert(const Mat& t) {
  if (t.rows != t.cols) throw input_error("only square matrices invert");
  const int n = t.rows;
  // Gauss-Jordan on [t | I].
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) {
    Vec r(2 * n);
    for (int j = 0; j < n; ++j) r[j] = t.at(i, j);
    r[n + i] = 1;
    rows.push_back(r);
  }
  Rref rr = rref(rows, 2 * n);
  if (rr.rank != n) throw input_error("matrix is singular");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) {
    if (rr.pivots[i] != i) throw input_error("matrix is singular");
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
  }
  return inv;
}

StructureConstants change_basis(const StructureConstants& sc, const Mat& t, const Mat& t_inv) {
  const int d = sc.dim;
  StructureConstants out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ti(d), tj(d);
      for (int k = 0; k < d; ++k) {
        ti[k] = t.at(k, i);
        tj[k] = t.at(k, j);
      }
      Vec br = t_inv.apply(sc.bracket(ti, tj));
      for (int k = 0; k < d; ++k) out.at(i, j, k) = br[k];
    }
  return out;
}

}  // namespace avop::test
