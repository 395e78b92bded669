#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cuspcoh/branching.hpp"
#include "cuspcoh/cohomology.hpp"
#include "cuspcoh/selftest.hpp"

using namespace cuspcoh;

TEST_CASE("standard representation weights") {
  for (int i = 0; i < 3; ++i) {
    std::vector<Int> mu(3, 0);
    mu[static_cast<std::size_t>(i)] = 1;
    CHECK(weight_multiplicity({1, 0, 0}, mu) == 1);
  }
  CHECK(weight_multiplicity({1, 0, 0}, {2, -1, 0}) == 0);
  CHECK(weyl_dimension({1, 0, 0}) == 3);
}

TEST_CASE("symmetric square of rank two") {
  CharacterMultiset weights = gl_weight_multiset({2, 0});
  CHECK(weights.total() == 3);
  CHECK(weights.multiplicity({2, 0}) == 1);
  CHECK(weights.multiplicity({1, 1}) == 1);
  CHECK(weights.multiplicity({0, 2}) == 1);
  CHECK(weyl_dimension({2, 0}) == 3);
}

TEST_CASE("zero weight of the rank-three adjoint has multiplicity two") {
  CHECK(weight_multiplicity({2, 1, 0}, {1, 1, 1}) == 2);
  CHECK(weyl_dimension({2, 1, 0}) == 8);
}

TEST_CASE("pattern totals equal the Weyl dimension") {
  Rng rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    LocalWeight lambda = random_dominant(n, 0, 6, rng);
    CHECK(gl_weight_multiset(lambda).total() == weyl_dimension(lambda));
  }
}

TEST_CASE("weight multiplicities are permutation invariant") {
  Rng rng(778);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    LocalWeight lambda = random_dominant(n, -2, 4, rng);
    CharacterMultiset weights = gl_weight_multiset(lambda);
    auto it = weights.entries().begin();
    std::advance(it,
                 std::uniform_int_distribution<std::size_t>(0, weights.entries().size() - 1)(rng));
    std::vector<Int> mu = it->first;
    std::shuffle(mu.begin(), mu.end(), rng);
    CHECK(weights.multiplicity(mu) == it->second);
  }
}

TEST_CASE("pattern enumeration agrees with the Freudenthal recursion") {
  Rng rng(779);
  for (int trial = 0; trial < 15; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    LocalWeight lambda = random_dominant(n, -3, 4, rng);
    CHECK(gl_weight_multiset(lambda) ==
          gl_weight_multiset(lambda, kDefaultDimCap, 1, WeightOracle::Freudenthal));
  }
}

TEST_CASE("pattern enumeration is independent of the parallelism width") {
  for (int jobs : {1, 2, 5})
    CHECK(gl_weight_multiset({4, 2, 0}, kDefaultDimCap, jobs) ==
          gl_weight_multiset({4, 2, 0}, kDefaultDimCap, 1));
}

TEST_CASE("pure pair validation") {
  CHECK_NOTHROW(PureWeightPair::from_lambda({2, 0}, 2).validate());
  CHECK_THROWS_AS((PureWeightPair{{0, 2}, {2, 0}, 2}.validate()), validation_error);
  CHECK_THROWS_AS((PureWeightPair{{2, 0}, {2, 0}, 1}.validate()), validation_error);
}

TEST_CASE("pair characters of the rank-two symmetric powers") {
  for (Int k : {Int{1}, Int{2}, Int{3}}) {
    PureWeightPair pair = PureWeightPair::from_lambda({k, 0}, k);
    REQUIRE(pair.lambda_star == LocalWeight{k, 0});
    CharacterMultiset chars = pair_compact_characters(pair);
    CHECK(chars.total() == (k + 1) * (k + 1));
    // m = 2(b - a) for a, b in {0..k}: multiplicity k + 1 - |j| at m = 2j.
    for (Int j = -k; j <= k; ++j) CHECK(chars.multiplicity({2 * j}) == k + 1 - (j < 0 ? -j : j));

    // After the chi shift the canonical character appears exactly once.
    CharacterMultiset shifted = chi_tensor_characters(pair);
    CHECK(shifted.multiplicity({2}) == 1);
    CHECK(shifted.total() == chars.total());
  }
}

TEST_CASE("rank one pairs collapse to the empty torus") {
  PureWeightPair pair{{3}, {-1}, 2};
  pair.validate();
  CharacterMultiset chars = pair_compact_characters(pair);
  CHECK(chars.total() == 1);
  CHECK(chars.multiplicity({}) == 1);
}

TEST_CASE("pair character total is the dimension product") {
  PureWeightPair pair = PureWeightPair::from_lambda({1, 0}, 1);
  CHECK(pair_compact_characters(pair).total() == 4);

  Rng rng(780);
  for (int trial = 0; trial < 10; ++trial) {
    Int w = std::uniform_int_distribution<Int>(-2, 2)(rng);
    PureWeightPair random_pair = PureWeightPair::from_lambda(random_dominant(3, -2, 2, rng), w);
    CHECK(pair_compact_characters(random_pair).total() ==
          weyl_dimension(random_pair.lambda) * weyl_dimension(random_pair.lambda_star));
  }
}

TEST_CASE("a multiset shift by the zero vector is the identity") {
  CharacterMultiset chars = gl_weight_multiset({2, 1, 0});
  CHECK(chars.shifted({0, 0, 0}) == chars);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(gl_weight_multiset({8, 4, 0, -4}, 100), resource_error);
  CHECK_THROWS_AS(pair_compact_characters(PureWeightPair::from_lambda({8, 4, 0, -4}, 0), 100),
                  resource_error);
}
