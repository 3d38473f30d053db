#include "avop/ybe.hpp"

namespace avop {

void require_well_formed(const SetSolution& s) {
  if (s.size <= 0) throw input_error("solution size must be positive");
  if ((int)s.first.size() != s.size || (int)s.second.size() != s.size)
    throw input_error("solution table has wrong number of rows");
  for (int x = 0; x < s.size; ++x) {
    if ((int)s.first[x].size() != s.size || (int)s.second[x].size() != s.size)
      throw input_error("solution row has wrong length");
    for (int y = 0; y < s.size; ++y) {
      if (s.first[x][y] < 0 || s.first[x][y] >= s.size ||
          s.second[x][y] < 0 || s.second[x][y] >= s.size)
        throw input_error("solution entry out of range at (" + std::to_string(x) +
                          "," + std::to_string(y) + ")");
    }
  }
}

namespace {

struct Triple {
  int a, b, c;
};

Triple apply_r12(const SetSolution& s, Triple t) {
  auto [u, v] = s.r(t.a, t.b);
  return {u, v, t.c};
}

Triple apply_r23(const SetSolution& s, Triple t) {
  auto [u, v] = s.r(t.b, t.c);
  return {t.a, u, v};
}

}  // namespace

Check is_ybe_solution(const SetSolution& s) {
  require_well_formed(s);
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      for (int z = 0; z < s.size; ++z) {
        Triple t{x, y, z};
        Triple lhs = apply_r23(s, apply_r12(s, apply_r23(s, t)));
        Triple rhs = apply_r12(s, apply_r23(s, apply_r12(s, t)));
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c)
          return Check::fail("braid-identity", {x, y, z});
      }
  return {};
}

bool is_invertible(const SetSolution& s) {
  require_well_formed(s);
  std::vector<char> seen((size_t)s.size * s.size, 0);
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y) {
      int idx = s.first[x][y] * s.size + s.second[x][y];
      if (seen[idx]) return false;
      seen[idx] = 1;
    }
  return true;
}

SetSolution braided_from_rack(const FiniteMagma& q) {
  require_well_formed(q);
  for (int x = 0; x < q.size; ++x)
    if (!is_permutation(left_translation(q, x)))
      throw precondition_error("left translation of " + std::to_string(x) +
                               " is not bijective");
  SetSolution s{q.size, q.table,
                std::vector<std::vector<int>>(q.size, std::vector<int>(q.size))};
  for (int x = 0; x < q.size; ++x)
    for (int y = 0; y < q.size; ++y) s.second[x][y] = x;
  return s;
}

Check is_braided_averaging(const SetSolution& s, const SetMap& a) {
  require_well_formed(s);
  if (a.size != s.size) throw input_error("operator size does not match solution");
  for (int v : a.image)
    if (v < 0 || v >= s.size) throw input_error("operator image out of range");
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y) {
      auto [u1, v1] = s.r(a(x), a(y));
      auto [u2, v2] = s.r(a(x), y);
      if (u1 != a(u2) || v1 != v2) return Check::fail("braided-averaging-identity", {x, y});
    }
  return {};
}

}  // namespace avop
