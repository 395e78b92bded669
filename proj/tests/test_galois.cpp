#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cuspcoh/field_datum.hpp"
#include "cuspcoh/selftest.hpp"

using namespace cuspcoh;

TEST_CASE("composition applies the right factor first") {
  Perm f({1, 0, 2});  // swap 0,1
  Perm g({1, 2, 0});  // 3-cycle
  Perm fg = f * g;
  CHECK(fg(0) == f(g(0)));
  CHECK(fg.images() == std::vector<int>{0, 2, 1});
  CHECK((f * f.inverse()).is_identity());
}

TEST_CASE("permutations must be bijections") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), validation_error);
  CHECK_THROWS_AS(Perm({0, 3}), validation_error);
}

TEST_CASE("order-2 involution model") {
  FieldDatum datum = imaginary_quadratic_datum();
  auto group = datum.group_elements();
  CHECK(group.size() == 2);
  CHECK(datum.totally_imaginary());
  CHECK_FALSE(datum.totally_real());
  CHECK(datum.commutator_normal_closure().size() == 1);
  CHECK(datum.f1_partition() == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("cyclic group generated alongside a trivial conjugation") {
  FieldDatum datum({"x", "y", "z"}, Perm::identity(3), {Perm({1, 2, 0})});
  CHECK(datum.group_elements().size() == 3);
  CHECK(datum.totally_real());
  CHECK(datum.commutator_normal_closure().size() == 1);
  CHECK(datum.f1_partition().size() == 3);
}

TEST_CASE("left translation model of the symmetric group on three letters") {
  FieldDatum datum = s3_sextic_datum();
  CHECK(datum.degree() == 6);
  CHECK(datum.totally_imaginary());
  CHECK(datum.transitive());

  auto group = datum.group_elements();
  CHECK(group.size() == 6);

  // Independent expectation: the closure is exactly the left translations by
  // the even elements {e, a, a2}.
  auto closure = datum.commutator_normal_closure();
  std::set<Perm> closure_set(closure.begin(), closure.end());
  std::set<Perm> expected{Perm::identity(6), Perm({1, 2, 0, 4, 5, 3}), Perm({2, 0, 1, 5, 3, 4})};
  CHECK(closure_set == expected);

  CHECK(datum.f1_partition() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("group closure properties on random datums") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    FieldDatum datum = random_field_datum(rng, trial % 2 == 0);
    auto group = datum.group_elements();
    std::set<Perm> set(group.begin(), group.end());
    REQUIRE(set.count(Perm::identity(datum.degree())) == 1);
    REQUIRE(set.count(datum.conjugation()) == 1);
    for (const Perm& g : datum.generators()) REQUIRE(set.count(g) == 1);
    bool closed = true;
    for (const Perm& g : group)
      if (!set.count(g.inverse()) || !set.count(g * datum.conjugation())) closed = false;
    REQUIRE(closed);

    // Conjugation by the ambient generators is enough for normality.
    std::vector<Perm> conjugators = datum.generators();
    conjugators.push_back(datum.conjugation());
    auto closure = datum.commutator_normal_closure();
    std::set<Perm> nset(closure.begin(), closure.end());
    bool normal = true;
    for (const Perm& nu : closure)
      for (const Perm& g : conjugators)
        if (!nset.count(g * nu * g.inverse())) normal = false;
    REQUIRE(normal);

    auto blocks = datum.f1_partition();
    std::size_t covered = 0;
    for (const auto& block : blocks) covered += block.size();
    REQUIRE(covered == static_cast<std::size_t>(datum.degree()));
    if (datum.transitive())
      for (const auto& block : blocks) REQUIRE(block.size() == blocks.front().size());
  }
}

TEST_CASE("central conjugation forces a trivial closure") {
  // Conjugation commutes with the sole generator.
  FieldDatum datum({"p", "q", "r", "s"}, Perm({1, 0, 3, 2}), {Perm({2, 3, 0, 1})});
  CHECK(datum.commutator_normal_closure().size() == 1);
  CHECK(datum.f1_partition().size() == 4);
}

TEST_CASE("element cap raises a resource error") {
  CHECK_THROWS_AS(s3_sextic_datum().group_elements(3), resource_error);
  CHECK_THROWS_AS(s3_sextic_datum().f1_partition(3), resource_error);
}

TEST_CASE("full symmetric group on eight points stays tractable") {
  // Transposition plus an 8-cycle generate the whole symmetric group.
  FieldDatum datum({"p0", "p1", "p2", "p3", "p4", "p5", "p6", "p7"}, Perm({1, 0, 2, 3, 4, 5, 6, 7}),
                   {Perm({1, 2, 3, 4, 5, 6, 7, 0})});
  CHECK(datum.group_elements().size() == 40320);
  CHECK(datum.commutator_normal_closure().size() == 20160);
  CHECK(datum.f1_partition().size() == 1);
}
