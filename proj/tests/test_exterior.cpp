#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspcoh/exterior.hpp"
#include "cuspcoh/lie.hpp"

using namespace cuspcoh;

TEST_CASE("wedge of the tangent block at rank two") {
  CharacterMultiset q1 = wedge_p_characters(2, 1);
  CHECK(q1.total() == 3);
  CHECK(q1.multiplicity({0}) == 1);
  CHECK(q1.multiplicity({2}) == 1);
  CHECK(q1.multiplicity({-2}) == 1);

  CharacterMultiset q0 = wedge_p_characters(2, 0);
  CHECK(q0.total() == 1);
  CHECK(q0.multiplicity({0}) == 1);

  // Top degree collapses back to the zero character.
  CharacterMultiset q3 = wedge_p_characters(2, 3);
  CHECK(q3.total() == 1);
  CHECK(q3.multiplicity({0}) == 1);
}

TEST_CASE("wedge of the off-diagonal block") {
  CharacterMultiset t1 = wedge_u_characters(2, 1);
  CHECK(t1.total() == 2);
  CHECK(t1.multiplicity({2}) == 1);
  CHECK(t1.multiplicity({-2}) == 1);

  // The canonical character appears once in the middle degree.
  CharacterMultiset t3 = wedge_u_characters(3, 3);
  CHECK(t3.multiplicity({4, 2}) == 1);

  for (int n = 1; n <= 4; ++n) {
    CharacterMultiset t0 = wedge_u_characters(n, 0);
    CHECK(t0.total() == 1);
    CHECK(t0.multiplicity(TorusChar(static_cast<std::size_t>(n - 1), 0)) == 1);
  }
}

TEST_CASE("wedge totals are binomial coefficients") {
  for (int n = 1; n <= 4; ++n)
    for (int q = 0; q <= n * n - 1; ++q)
      CHECK(wedge_p_characters(n, q).total() == binomial(n * n - 1, q));
}

TEST_CASE("adjoint oracle totals") {
  for (int q = 0; q <= 8; ++q) CHECK(adjoint_wedge_oracle(3, q).total() == binomial(8, q));
}

TEST_CASE("subset parametrization matches the adjoint oracle") {
  for (int n = 1; n <= 3; ++n)
    for (int q = 0; q <= n * n - 1; ++q)
      CHECK(wedge_p_characters(n, q) == adjoint_wedge_oracle(n, q));
  // Rank-four spot check at the heaviest degree.
  CHECK(wedge_p_characters(4, 6) == adjoint_wedge_oracle(4, 6));
}

TEST_CASE("every wedge character sits between -2rho and 2rho") {
  for (int n = 2; n <= 4; ++n)
    for (int q = 0; q <= n * n - 1; ++q) {
      const CharacterMultiset wedge = wedge_p_characters(n, q);
      for (const auto& [gamma, mult] : wedge.entries())
        REQUIRE(dominance_interval_check(gamma, n));
    }
}

TEST_CASE("wedge duality") {
  for (int n = 2; n <= 4; ++n) {
    const int dim = n * n - 1;
    for (int q = 0; q <= dim; ++q)
      CHECK(wedge_p_characters(n, q).negated() == wedge_p_characters(n, dim - q));
  }
}

TEST_CASE("oracle guard and argument validation") {
  CHECK_THROWS_AS(adjoint_wedge_oracle(6, 1), resource_error);
  CHECK_THROWS_AS(wedge_p_characters(2, 4), validation_error);
  CHECK_THROWS_AS(wedge_u_characters(2, 3), validation_error);
  CHECK_THROWS_AS(wedge_p_characters(2, -1), validation_error);
}

TEST_CASE("oracle is independent of the parallelism width") {
  for (int jobs : {1, 2, 3, 7})
    CHECK(adjoint_wedge_oracle(3, 4, false, jobs) == adjoint_wedge_oracle(3, 4, false, 1));
}
