#include <doctest.h>

#include "avop/algebra.hpp"
#include "helpers.hpp"

using namespace avop;

namespace {

Vec basis(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}

// {e0,e0} = e1, everything else 0.
StructureConstants d2_leibniz() {
  StructureConstants sc(2);
  sc.at(0, 0, 1) = 1;
  return sc;
}

// basis (h,e,f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
StructureConstants sl2() {
  StructureConstants sc(3);
  sc.at(0, 1, 1) = 2;
  sc.at(1, 0, 1) = -2;
  sc.at(0, 2, 2) = -2;
  sc.at(2, 0, 2) = 2;
  sc.at(1, 2, 0) = 1;
  sc.at(2, 1, 0) = -1;
  return sc;
}

StructureConstants so3() {
  StructureConstants sc(3);
  sc.at(0, 1, 2) = 1;
  sc.at(1, 0, 2) = -1;
  sc.at(1, 2, 0) = 1;
  sc.at(2, 1, 0) = -1;
  sc.at(2, 0, 1) = 1;
  sc.at(0, 2, 1) = -1;
  return sc;
}

StructureConstants abelian(int d) { return StructureConstants(d); }

}  // namespace

TEST_CASE("algebra validators") {
  StructureConstants d2 = d2_leibniz();
  CHECK(validate_leibniz(d2).ok);
  Check lie = validate_lie(d2);
  CHECK(!lie.ok);
  CHECK(lie.witness.axiom == "skew-symmetry");

  CHECK(validate_lie(sl2()).ok);
  CHECK(validate_lie(so3()).ok);
  CHECK(validate_leibniz(sl2()).ok);  // Lie implies Leibniz
  CHECK(validate_lie_leibniz(sl2(), sl2()).ok);
  CHECK(validate_lie_leibniz(abelian(2), d2).ok);

  StructureConstants bad = so3();
  bad.at(0, 1, 0) = 1;
  bad.at(1, 0, 0) = -1;  // keep skew, break Jacobi
  Check j = validate_lie(bad);
  CHECK(!j.ok);
  CHECK(j.witness.axiom == "jacobi");
}

TEST_CASE("identities verified on the basis also hold at random rational points") {
  test::RatGen gen(20240811);
  StructureConstants d2 = d2_leibniz(), g = sl2();
  for (int trial = 0; trial < 20; ++trial) {
    Vec x = gen.vec(2), y = gen.vec(2), z = gen.vec(2);
    Vec lhs = d2.bracket(x, d2.bracket(y, z));
    Vec rhs = d2.bracket(d2.bracket(x, y), z);
    Vec rhs2 = d2.bracket(y, d2.bracket(x, z));
    for (int k = 0; k < 2; ++k) CHECK(lhs[k] == rhs[k] + rhs2[k]);

    Vec a = gen.vec(3), b = gen.vec(3), c = gen.vec(3);
    Vec jac(3);
    Vec t1 = g.bracket(a, g.bracket(b, c));
    Vec t2 = g.bracket(b, g.bracket(c, a));
    Vec t3 = g.bracket(c, g.bracket(a, b));
    for (int k = 0; k < 3; ++k) CHECK((t1[k] + t2[k] + t3[k]).is_zero());
  }
}

TEST_CASE("linear averaging operators") {
  StructureConstants d2 = d2_leibniz();
  CHECK(is_linear_averaging(LinearAvgKind::leibniz, d2, Mat::eye(2)).ok);
  CHECK(is_linear_averaging(LinearAvgKind::leibniz, d2, Mat(2, 2)).ok);
  CHECK(is_linear_averaging(LinearAvgKind::lie, sl2(), Mat(3, 3)).ok);

  // the square-zero derivation d(e0)=e1, d(e1)=0 on the d2 algebra
  LinearMap d(2, 2);
  d.at(1, 0) = 1;
  CHECK(is_linear_averaging(LinearAvgKind::leibniz, d2, d).ok);

  // projection onto the Cartan line of sl2 is averaging
  LinearMap ph(3, 3);
  ph.at(0, 0) = 1;
  CHECK(is_linear_averaging(LinearAvgKind::lie, sl2(), ph).ok);

  // a generic map is not
  LinearMap shift(3, 3);
  shift.at(1, 0) = 1;
  shift.at(2, 1) = 1;
  shift.at(0, 2) = 1;
  CHECK(!is_linear_averaging(LinearAvgKind::lie, sl2(), shift).ok);

  // ad-invariance
  CHECK(is_linear_averaging(LinearAvgKind::ad_invariant, sl2(), Mat(3, 3)).ok);
  Mat two = Mat::eye(3);
  two.at(0, 0) = 2;
  two.at(1, 1) = 2;
  two.at(2, 2) = 2;
  CHECK(is_linear_averaging(LinearAvgKind::ad_invariant, sl2(), two).ok);
  CHECK(!is_linear_averaging(LinearAvgKind::ad_invariant, sl2(), ph).ok);
}

TEST_CASE("averaging operators satisfy the flipped identity too") {
  // search a small grid of candidate operators on sl2
  StructureConstants g = sl2();
  std::vector<LinearMap> averaging;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        LinearMap p(3, 3);
        p.at(0, 0) = a;
        p.at(1, 1) = b;
        p.at(2, 2) = c;
        if (is_linear_averaging(LinearAvgKind::lie, g, p).ok) averaging.push_back(p);
      }
  CHECK(averaging.size() >= 3);  // at least 0, id, Cartan projection
  for (const LinearMap& p : averaging)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec pi = p.apply(basis(3, i)), pj = p.apply(basis(3, j));
        Vec lhs = g.bracket(pi, pj);
        Vec rhs = p.apply(g.bracket(basis(3, i), pj));
        for (int k = 0; k < 3; ++k) CHECK(lhs[k] == rhs[k]);
      }
}

TEST_CASE("representations") {
  StructureConstants d2 = d2_leibniz();
  CHECK(validate_representation(d2, adjoint_representation(d2)).ok);
  CHECK(validate_representation(sl2(), adjoint_representation(sl2())).ok);
  CHECK(validate_representation(d2, BiRepresentation(2, 3)).ok);  // zero actions
  CHECK(validate_representation(d2, n_copy_representation(d2, 2)).ok);

  // flipping the sign of the right action must match a direct re-check
  BiRepresentation flipped = adjoint_representation(d2);
  for (Rat& r : flipped.rhoR) r = -r;
  Check mine = validate_representation(d2, flipped);
  bool oracle = true;
  for (int i = 0; i < 2 && oracle; ++i)
    for (int j = 0; j < 2 && oracle; ++j)
      for (int k = 0; k < 2; ++k) {
        Vec x = basis(2, i), y = basis(2, j), v = basis(2, k);
        Vec l1 = flipped.act_left(x, flipped.act_left(y, v));
        Vec r1 = flipped.act_left(d2.bracket(x, y), v);
        Vec r2 = flipped.act_left(y, flipped.act_left(x, v));
        Vec l2 = flipped.act_left(x, flipped.act_right(v, y));
        Vec r3 = flipped.act_right(flipped.act_left(x, v), y);
        Vec r4 = flipped.act_right(v, d2.bracket(x, y));
        Vec l3 = flipped.act_right(v, d2.bracket(x, y));
        Vec r5 = flipped.act_right(flipped.act_right(v, x), y);
        Vec r6 = flipped.act_left(x, flipped.act_right(v, y));
        for (int t = 0; t < 2; ++t) {
          if (l1[t] != r1[t] + r2[t] || l2[t] != r3[t] + r4[t] || l3[t] != r5[t] + r6[t]) {
            oracle = false;
            break;
          }
        }
      }
  CHECK(mine.ok == oracle);
}

TEST_CASE("relative averaging operators on representations") {
  StructureConstants d2 = d2_leibniz();
  BiRepresentation adj = adjoint_representation(d2);
  CHECK(is_relative_averaging_linear(d2, adj, Mat::eye(2)).ok);

  BiRepresentation two = n_copy_representation(d2, 2);
  LinearMap sum(2, 4);
  sum.at(0, 0) = 1;
  sum.at(1, 1) = 1;
  sum.at(0, 2) = 1;
  sum.at(1, 3) = 1;
  CHECK(is_relative_averaging_linear(d2, two, sum).ok);

  LinearMap pr1(2, 4), pr2(2, 4);
  pr1.at(0, 0) = 1;
  pr1.at(1, 1) = 1;
  pr2.at(0, 2) = 1;
  pr2.at(1, 3) = 1;
  CHECK(is_relative_averaging_linear(d2, two, pr1).ok);
  CHECK(is_relative_averaging_linear(d2, two, pr2).ok);
}

TEST_CASE("hemi-semidirect products") {
  StructureConstants d2 = d2_leibniz();
  DiLeibniz hemi = hemi_semidirect(d2, adjoint_representation(d2));
  CHECK(hemi.dim() == 4);
  CHECK(validate_di_leibniz(hemi).ok);

  DiLeibniz zero = hemi_semidirect(d2, BiRepresentation(2, 2));
  CHECK(zero.left == zero.right);  // bracket (+) 0 on both sides

  DiLeibniz ab = hemi_semidirect(abelian(2), adjoint_representation(abelian(2)));
  CHECK(ab.left.c == std::vector<Rat>((size_t)4 * 4 * 4));
}

TEST_CASE("induced di-Leibniz structures and the graph criterion") {
  StructureConstants d2 = d2_leibniz();
  BiRepresentation adj = adjoint_representation(d2);
  DiLeibniz ind = induced_di_leibniz(d2, adj, Mat::eye(2));
  CHECK(ind.left == d2);
  CHECK(ind.right == d2);

  DiLeibniz zero = induced_di_leibniz(d2, adj, Mat(2, 2));
  CHECK(zero.left.c == std::vector<Rat>(8));
  CHECK(zero.right.c == std::vector<Rat>(8));

  BiRepresentation two = n_copy_representation(d2, 2);
  LinearMap sum(2, 4);
  sum.at(0, 0) = 1;
  sum.at(1, 1) = 1;
  sum.at(0, 2) = 1;
  sum.at(1, 3) = 1;
  DiLeibniz dsum = induced_di_leibniz(d2, two, sum);
  CHECK(validate_di_leibniz(dsum).ok);
}

TEST_CASE("graph criterion equals the relative averaging identity") {
  test::RatGen gen(7);
  StructureConstants d2 = d2_leibniz();
  std::vector<std::pair<StructureConstants, BiRepresentation>> cases{
      {d2, adjoint_representation(d2)},
      {abelian(3), adjoint_representation(abelian(3))},
      {d2, BiRepresentation(2, 3)},
      {sl2(), adjoint_representation(sl2())},
  };
  int eq_true = 0, eq_false = 0;
  for (const auto& [h, rep] : cases)
    for (int trial = 0; trial < 25; ++trial) {
      LinearMap p = gen.matrix(h.dim, rep.mod_dim, 1);
      bool direct = is_relative_averaging_linear(h, rep, p).ok;
      CHECK(graph_check_linear(h, rep, p) == direct);
      (direct ? eq_true : eq_false)++;
    }
  CHECK(eq_true > 0);
  CHECK(eq_false > 0);
}

TEST_CASE("leibnizification of the worked examples") {
  StructureConstants d2 = d2_leibniz();

  // equal brackets: nothing to quotient
  DiLeibniz diag{d2, d2};
  Leibnizification l0 = leibnizification(diag);
  CHECK(l0.quo.dim() == 2);
  CHECK(l0.leib == d2);

  // hemi-semidirect with the adjoint representation drops one dimension
  DiLeibniz hemi = hemi_semidirect(d2, adjoint_representation(d2));
  Leibnizification l1 = leibnizification(hemi);
  CHECK(l1.quo.dim() == 3);

  // right bracket zero: the difference span is the image of the left bracket
  DiLeibniz leftonly{d2, StructureConstants(2)};
  REQUIRE(validate_di_leibniz(leftonly).ok);
  Leibnizification l2 = leibnizification(leftonly);
  CHECK(l2.quo.dim() == 1);
}

TEST_CASE("di-Leibniz embeddings") {
  StructureConstants d2 = d2_leibniz();
  DiLeibniz diag{abelian(2), abelian(2)};
  DiLeibnizEmbedding e0 = embed_di_leibniz(diag);
  CHECK(e0.ambient.c == std::vector<Rat>((size_t)4 * 4 * 4));  // ambient abelian

  DiLeibnizEmbedding e1 = embed_di_leibniz(hemi_semidirect(d2, adjoint_representation(d2)));
  CHECK(e1.ambient.dim == 3 + 4);

  DiLeibnizEmbedding e2 = embed_di_leibniz(DiLeibniz{d2, d2});
  CHECK(e2.ambient.dim == 4);
}

TEST_CASE("descendent Leibniz and Lie-Leibniz bundles") {
  StructureConstants g = sl2();
  StructureConstants zero = descendent_leibniz(g, Mat(3, 3));
  CHECK(zero.c == std::vector<Rat>(27));

  CHECK(descendent_leibniz(g, Mat::eye(3)) == g);

  LinearMap ph(3, 3);
  ph.at(0, 0) = 1;  // Cartan projection found by the grid search above
  StructureConstants desc = descendent_leibniz(g, ph);
  CHECK(validate_leibniz(desc).ok);
  LieLeibnizPair pair = lie_leibniz_bundle(g, ph);
  CHECK(validate_lie_leibniz(pair.lie, pair.leib).ok);

  CHECK_THROWS_AS(descendent_leibniz(d2_leibniz(), Mat::eye(2)), precondition_error);
}

TEST_CASE("Lie-Leibniz embeddings") {
  // abelian: nothing is quotiented, ambient is the abelian double
  StructureConstants ab = abelian(2);
  LieLeibnizEmbedding e0 = embed_lie_leibniz(ab, ab);
  CHECK(e0.quo.dim() == 2);
  CHECK(e0.ambient.dim == 4);
  CHECK(e0.ambient.c == std::vector<Rat>((size_t)4 * 4 * 4));

  // d2 Leibniz over the zero Lie bracket: squares span e1
  LieLeibnizEmbedding e1 = embed_lie_leibniz(abelian(2), d2_leibniz());
  CHECK(e1.quo.dim() == 1);
  CHECK(e1.ambient.dim == 3);

  // sl2 with the Leibniz bracket equal to the Lie bracket: squares vanish,
  // so the quotient is the whole algebra and the ambient is the double
  LieLeibnizEmbedding e2 = embed_lie_leibniz(sl2(), sl2());
  CHECK(e2.quo.dim() == 3);
  CHECK(e2.ambient.dim == 6);
}

TEST_CASE("braided vector spaces from skew brackets") {
  Mat s_ab = braided_from_lie(abelian(3));
  CHECK(ybe_linear_check(s_ab));  // the swap

  CHECK(ybe_linear_check(braided_from_lie(sl2())));
  CHECK(ybe_linear_check(braided_from_lie(so3())));

  StructureConstants bad = so3();
  bad.at(0, 1, 0) = 1;
  bad.at(1, 0, 0) = -1;
  CHECK(!validate_lie(bad).ok);
  CHECK(!ybe_linear_check(braided_from_lie(bad)));

  StructureConstants nonskew = so3();
  nonskew.at(0, 0, 1) = 1;
  CHECK_THROWS_AS(braided_from_lie(nonskew), precondition_error);
}

TEST_CASE("braided averaging matches Lie averaging") {
  StructureConstants g = sl2();
  test::RatGen gen(99);
  LinearMap ph(3, 3);
  ph.at(0, 0) = 1;
  std::vector<LinearMap> candidates{Mat(3, 3), Mat::eye(3), ph};
  for (int i = 0; i < 17; ++i) candidates.push_back(gen.matrix(3, 3, 2));
  int eq_true = 0, eq_false = 0;
  for (const LinearMap& p : candidates) {
    bool direct = is_linear_averaging(LinearAvgKind::lie, g, p).ok;
    CHECK(braided_averaging_check(g, p) == direct);
    (direct ? eq_true : eq_false)++;
  }
  CHECK(eq_true >= 3);
  CHECK(eq_false >= 1);
}

TEST_CASE("example builders") {
  StructureConstants d2 = d2_leibniz();
  LinearMap d(2, 2);
  d.at(1, 0) = 1;
  DiLeibniz diff = differential_di_leibniz(d2, d);
  CHECK(validate_di_leibniz(diff).ok);

  LinearMap notd(2, 2);
  notd.at(0, 1) = 1;
  notd.at(1, 0) = 1;  // swap: squares to identity
  CHECK_THROWS_AS(differential_di_leibniz(d2, notd), precondition_error);

  DiLeibniz one = direct_sum_di_leibniz(d2, 1);
  CHECK(one.left == d2);
  CHECK(one.right == d2);

  DiLeibniz two = direct_sum_di_leibniz(d2, 2);
  CHECK(two.dim() == 4);
  CHECK(validate_di_leibniz(two).ok);
}

TEST_CASE("averaging associative operators are Lie averaging on the commutator") {
  // 2-dim associative algebras: dual numbers k[x]/(x^2) and k (+) k
  StructureConstants dual(2);
  dual.at(0, 0, 0) = 1;  // e0 = 1
  dual.at(0, 1, 1) = 1;
  dual.at(1, 0, 1) = 1;  // e1 = x, x^2 = 0
  StructureConstants split(2);
  split.at(0, 0, 0) = 1;
  split.at(1, 1, 1) = 1;
  for (const StructureConstants& a : {dual, split}) {
    REQUIRE(is_associative(a).ok);
    StructureConstants comm = commutator_bracket(a);
    for (int m00 = -1; m00 <= 1; ++m00)
      for (int m01 = -1; m01 <= 1; ++m01)
        for (int m10 = -1; m10 <= 1; ++m10)
          for (int m11 = -1; m11 <= 1; ++m11) {
            LinearMap p(2, 2);
            p.at(0, 0) = m00;
            p.at(0, 1) = m01;
            p.at(1, 0) = m10;
            p.at(1, 1) = m11;
            if (is_associative_averaging(a, p).ok)
              CHECK(is_linear_averaging(LinearAvgKind::lie, comm, p).ok);
          }
  }
}

TEST_CASE("randomized leibnizification round trips") {
  StructureConstants d2 = d2_leibniz();
  std::vector<std::pair<StructureConstants, BiRepresentation>> cases{
      {d2, adjoint_representation(d2)},
      {abelian(1), n_copy_representation(abelian(1), 3)},
      {abelian(3), adjoint_representation(abelian(3))},
      {d2, BiRepresentation(2, 1)},
  };
  for (const auto& [h, rep] : cases) {
    // find relative averaging operators on a small grid
    std::vector<LinearMap> found;
    const int entries = h.dim * rep.mod_dim;
    std::vector<int> grid(entries, -1);
    while ((int)found.size() < 6) {
      LinearMap p(h.dim, rep.mod_dim);
      for (int i = 0; i < entries; ++i) p.a[i] = grid[i];
      if (is_relative_averaging_linear(h, rep, p).ok) found.push_back(p);
      int i = entries - 1;
      while (i >= 0 && grid[i] == 1) grid[i--] = -1;
      if (i < 0) break;
      ++grid[i];
    }
    REQUIRE(!found.empty());
    for (const LinearMap& p : found) {
      DiLeibniz induced = induced_di_leibniz(h, rep, p);
      Leibnizification l = leibnizification(induced);
      CHECK(is_relative_averaging_linear(l.leib, l.rep, l.q).ok);
      CHECK(induced_di_leibniz(l.leib, l.rep, l.q) == induced);
    }
  }
}
