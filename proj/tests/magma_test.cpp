#include <doctest.h>

#include "avop/group.hpp"
#include "avop/magma.hpp"
#include "helpers.hpp"

using namespace avop;

TEST_CASE("trivial rack on 3 elements is a quandle") {
  RackReport r = validate_rack(trivial_rack(3));
  CHECK(r.is_rack);
  CHECK(r.is_quandle);
}

TEST_CASE("flip rack n=2 has the documented table and is a non-quandle rack") {
  FiniteMagma m = flip_rack(2);
  CHECK(m.table == std::vector<std::vector<int>>{{1, 0}, {1, 0}});
  RackReport r = validate_rack(m);
  CHECK(r.is_rack);
  CHECK(!r.is_quandle);
}

TEST_CASE("left projection is not a rack, with a translation witness") {
  FiniteMagma m{2, {{0, 0}, {1, 1}}, {}};
  RackReport r = validate_rack(m);
  CHECK(!r.is_rack);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses.front().axiom == "left-translation-bijective");
}

TEST_CASE("malformed table is rejected naming the cell") {
  FiniteMagma m{2, {{0, 3}, {1, 1}}, {}};
  CHECK_THROWS_WITH_AS(validate_rack(m), "magma entry (0,1) = 3 out of range", input_error);
}

TEST_CASE("pointedness") {
  // flip rack n=3 fixes only the middle element; it is not pointed there
  // because the left translation of 1 is the flip, not the identity.
  RackReport r = validate_rack(flip_rack(3));
  CHECK(r.pointed_elements.empty());
  RackReport t = validate_rack(trivial_rack(2));
  CHECK(t.pointed_elements == std::vector<int>{0, 1});  // both axioms collapse
  RackReport c = validate_rack(conjugation_rack(symmetric_group(3)));
  CHECK(c.pointed_elements == std::vector<int>{0});
  // requesting a non-pointed element records a witness
  RackReport p = validate_rack(flip_rack(3), 0);
  bool has = false;
  for (auto& w : p.witnesses) has = has || w.axiom == "pointedness";
  CHECK(has);
}

TEST_CASE("takasaki quandle on Z3 is 2a-b") {
  FiniteMagma m = takasaki_quandle(cyclic_group(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(m.at(a, b) == ((2 * a - b) % 3 + 3) % 3);
  RackReport r = validate_rack(m);
  CHECK(r.is_quandle);
}

TEST_CASE("alexander quandle with t = negation equals takasaki") {
  FiniteGroup z3 = cyclic_group(3);
  SetMap neg{3, {0, 2, 1}};
  CHECK(alexander_quandle(z3, neg) == takasaki_quandle(z3));
  CHECK(validate_rack(alexander_quandle(z3, neg)).is_quandle);
}

TEST_CASE("conjugation rack of an abelian group is trivial") {
  CHECK(conjugation_rack(cyclic_group(4)) == trivial_rack(4));
}

TEST_CASE("takasaki and alexander reject non-abelian groups") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK_THROWS_AS(takasaki_quandle(s3), precondition_error);
  CHECK_THROWS_AS(alexander_quandle(s3, identity_map(6)), precondition_error);
}

TEST_CASE("alexander rejects a non-automorphism twist") {
  FiniteGroup z4 = cyclic_group(4);
  SetMap swap01{4, {1, 0, 2, 3}};  // bijective but not a homomorphism
  CHECK_THROWS_AS(alexander_quandle(z4, swap01), precondition_error);
}

TEST_CASE("rack homomorphisms") {
  FiniteMagma f3 = flip_rack(3);
  CHECK(is_rack_homomorphism(identity_map(3), f3, f3));
  // the swap from flip n=2 to trivial n=2 fails: f(x<>y) = y but f(x)<>'f(y) = 1-y
  SetMap swap{2, {1, 0}};
  CHECK(!is_rack_homomorphism(swap, flip_rack(2), trivial_rack(2)));
  CHECK_THROWS_AS(is_rack_homomorphism(SetMap{2, {0, 1}}, f3, f3), input_error);
}

TEST_CASE("subrack closure") {
  FiniteMagma conj = conjugation_rack(symmetric_group(3));
  CHECK(is_subrack({0, 1, 2, 3, 4, 5}, conj));
  CHECK(is_subrack({}, conj));
  CHECK(is_subrack({0}, conj));  // {identity}
}

TEST_CASE("complete racks") {
  CHECK(!is_complete_rack(trivial_rack(2)));
  CHECK(!is_complete_rack(conjugation_rack(cyclic_group(2))));
  CHECK(!is_complete_rack(flip_rack(3)));
  // 2a - b has invertible columns over odd cyclic groups
  CHECK(is_complete_rack(takasaki_quandle(cyclic_group(3))));
  CHECK(is_complete_rack(takasaki_quandle(cyclic_group(5))));
  CHECK(!is_complete_rack(takasaki_quandle(cyclic_group(4))));
  // conjugation racks are never column-complete beyond the one-point rack:
  // the identity column is constant
  CHECK(!is_complete_rack(conjugation_rack(symmetric_group(3))));
}

TEST_CASE("validate_rack agrees with the quantifier oracle on every size <= 3 table") {
  for (int n = 1; n <= 3; ++n) {
    int racks = 0;
    test::for_each_table(n, [&](const FiniteMagma& m) {
      bool dist = true;
      for (int x = 0; x < n && dist; ++x)
        for (int y = 0; y < n && dist; ++y)
          for (int z = 0; z < n; ++z)
            if (m.at(x, m.at(y, z)) != m.at(m.at(x, y), m.at(x, z))) {
              dist = false;
              break;
            }
      bool unique = true;
      for (int x = 0; x < n && unique; ++x)
        for (int y = 0; y < n && unique; ++y) {
          int count = 0;
          for (int c = 0; c < n; ++c)
            if (m.at(x, c) == y) ++count;
          if (count != 1) unique = false;
        }
      bool oracle = dist && unique;
      CHECK(validate_rack(m).is_rack == oracle);
      if (oracle) ++racks;
    });
    CHECK(racks == (int)test::all_labeled_racks(n).size());
  }
}

TEST_CASE("left translations of racks invert to the identity") {
  for (int n = 1; n <= 3; ++n)
    for (const FiniteMagma& q : test::all_labeled_racks(n))
      for (int x = 0; x < n; ++x) {
        SetMap l = left_translation(q, x);
        CHECK(compose(inverse_permutation(l), l) == identity_map(n));
      }
}

TEST_CASE("rack automorphism guard") {
  CHECK_THROWS_AS(rack_automorphism_group(trivial_rack(7)), guard_error);
  CHECK(rack_automorphism_group(trivial_rack(3)).size() == 6);  // all permutations
}
