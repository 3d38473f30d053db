#include <doctest.h>

#include <algorithm>

#include "avop/group.hpp"
#include "helpers.hpp"

using namespace avop;

TEST_CASE("cyclic group of order 3 validates with identity 0") {
  FiniteGroup g = cyclic_group(3);
  CHECK(g.identity == 0);
  CHECK(g.inverse == std::vector<int>{0, 2, 1});
}

TEST_CASE("S3 built from the permutations of 3 points has order 6") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.size() == 6);
  CHECK(!is_abelian(s3));
  CHECK(validate_group(s3.magma).ok);
}

TEST_CASE("left projection has no identity") {
  FiniteMagma m{2, {{0, 0}, {1, 1}}, {}};
  GroupResult r = validate_group(m);
  CHECK(!r.ok);
  CHECK(r.witness.axiom == "identity");
}

TEST_CASE("non-associative magma is rejected with a witness") {
  // subtraction mod 3: has right identity only; identity axiom fails first
  FiniteMagma sub{3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}, {}};
  GroupResult r = validate_group(sub);
  CHECK(!r.ok);
}

TEST_CASE("automorphism groups match the brute-force filter") {
  auto oracle = [](const FiniteGroup& g) {
    int count = 0;
    for (const SetMap& p : permutations_of(g.size()))
      if (is_group_homomorphism(p, g, g)) ++count;
    return count;
  };
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), s3 = symmetric_group(3);
  CHECK(automorphism_group(z2).size() == 1);
  CHECK(automorphism_group(z3).size() == 2);
  CHECK(automorphism_group(s3).size() == 6);
  CHECK((int)automorphism_group(z2).size() == oracle(z2));
  CHECK((int)automorphism_group(z3).size() == oracle(z3));
  CHECK((int)automorphism_group(s3).size() == oracle(s3));
  CHECK(automorphism_group(klein_four_group()).size() == 6);
  CHECK_THROWS_AS(automorphism_group(cyclic_group(13)), guard_error);
}

TEST_CASE("automorphism groups are closed under composition and inverse") {
  for (const auto& [name, g] : test::groups_up_to_6()) {
    auto aut = automorphism_group(g);
    auto find = [&](const SetMap& f) {
      return std::binary_search(aut.begin(), aut.end(), f);
    };
    CHECK(find(identity_map(g.size())));
    for (const SetMap& f : aut) {
      CHECK(find(inverse_permutation(f)));
      for (const SetMap& h : aut) CHECK(find(compose(f, h)));
    }
  }
}

TEST_CASE("permutation closure") {
  CHECK(permutation_closure({identity_map(4)}, 4).elements.size() == 1);
  SetMap cycle{3, {1, 2, 0}};
  CHECK(permutation_closure({cycle}, 3).elements.size() == 3);
  // all left translations of the flip rack coincide, generating order 2
  std::vector<SetMap> gens;
  FiniteMagma f3 = flip_rack(3);
  for (int x = 0; x < 3; ++x) gens.push_back(left_translation(f3, x));
  CHECK(permutation_closure(gens, 3).elements.size() == 2);
  CHECK_THROWS_AS(permutation_closure({SetMap{2, {0, 0}}}, 2), input_error);
}

TEST_CASE("permutation closure is idempotent") {
  SetMap cycle{4, {1, 2, 3, 0}}, swap{4, {1, 0, 2, 3}};
  PermGroup g = permutation_closure({cycle, swap}, 4);
  PermGroup again = permutation_closure(g.elements, 4);
  CHECK(g.elements == again.elements);
  CHECK(g.group.magma == again.group.magma);
}

TEST_CASE("semidirect products") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  FiniteGroup direct = direct_product(z2, z3);
  CHECK(direct.size() == 6);
  CHECK(test::is_isomorphic(direct, cyclic_group(6)));

  SetMap neg{3, {0, 2, 1}};
  FiniteGroup sd = semidirect_product(z2, z3, {identity_map(3), neg});
  CHECK(sd.size() == 6);
  CHECK(!is_abelian(sd));
  CHECK(test::is_isomorphic(sd, symmetric_group(3)));

  // hom failing multiplicativity: negation at the identity of Z2
  CHECK_THROWS_AS(semidirect_product(z2, z3, {neg, neg}), precondition_error);
  CHECK(is_abelian(direct_product(z2, z2)));
}

TEST_CASE("group actions") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(validate_action(adjoint_action(s3)).ok);

  GroupAction trivial{s3, 4, std::vector<std::vector<int>>(6, {0, 1, 2, 3})};
  CHECK(validate_action(trivial).ok);

  GroupAction bad = trivial;
  bad.phi[s3.identity] = {1, 0, 2, 3};
  Check c = validate_action(bad);
  CHECK(!c.ok);
  CHECK(c.witness.axiom == "identity-acts-trivially");
}

TEST_CASE("conjugation racks of all catalog groups are pointed racks") {
  for (const auto& [name, g] : test::groups_up_to_6()) {
    RackReport r = validate_rack(conjugation_rack(g), g.identity);
    CHECK(r.is_rack);
    CHECK(std::find(r.pointed_elements.begin(), r.pointed_elements.end(), g.identity) !=
          r.pointed_elements.end());
  }
}
