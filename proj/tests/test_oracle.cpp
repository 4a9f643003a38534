#include <doctest.h>

#include "generators.hpp"
#include "spincert/oracle.hpp"

using namespace spincert;

TEST_CASE("search_null_cobordant") {
  SearchBudget tight{1, 4};
  auto p0 = search_null_cobordant(IntMatrix{{0, 1}, {1, 1}}, tight);
  REQUIRE(p0.has_value());
  CHECK(*p0 == IntMatrix::identity(2));

  auto p1 = search_null_cobordant(IntMatrix{{1, 0}, {0, -1}}, tight);
  REQUIRE(p1.has_value());
  CHECK(*p1 == IntMatrix{{1, 1}, {0, 1}});
  CHECK(congruence(*p1, IntMatrix{{1, 0}, {0, -1}}).at(0, 0) == 0);

  // Definite form: no isotropic vector exists at any budget.
  auto none = search_null_cobordant(IntMatrix{{1, 0}, {0, 1}}, {3, 4});
  CHECK_FALSE(none.has_value());

  CHECK(search_null_cobordant(IntMatrix(), tight).has_value());
  CHECK_THROWS_WITH_AS(search_null_cobordant(IntMatrix{{1}}, tight),
                       doctest::Contains("OddSize"), Error);
  CHECK_THROWS_WITH_AS(search_null_cobordant(IntMatrix(6, 6), {1, 4}),
                       doctest::Contains("SizeExceedsBudget"), Error);
  CHECK_THROWS_AS(search_null_cobordant(IntMatrix(8, 8), {1, 8}), Error);
}

TEST_CASE("search result is re-verified sound") {
  IntMatrix tre{{-1, 1}, {0, -1}};
  IntMatrix x = block_sum(tre, -tre);
  auto p = search_null_cobordant(x, {2, 4});
  REQUIRE(p.has_value());
  CHECK(is_integrally_invertible(*p));
  CHECK(congruence(*p, x).slice(0, 0, 2, 2).is_zero());
}

TEST_CASE("cross_validate") {
  SliceCertificate two{IntMatrix{{0, 1}, {1, 1}}, IntMatrix(), IntMatrix(),
                       IntMatrix::identity(2), 1};
  CHECK(cross_validate(two, {3, 4}));

  SliceCertificate tre = certify_pair_sum(IntMatrix{{-1, 1}, {0, -1}});
  CHECK(cross_validate(tre, {3, 4}));

  // Certificate that fails verify is rejected without search.
  SliceCertificate bogus{IntMatrix{{1, 0}, {0, 1}}, IntMatrix(), IntMatrix(),
                         IntMatrix::identity(2), 1};
  CHECK_FALSE(cross_validate(bogus, {3, 4}));

  SliceCertificate six = certify_pair_sum(IntMatrix{{0, 1, 0},
                                                    {0, 0, 1},
                                                    {1, 0, 0}});
  CHECK_THROWS_WITH_AS(cross_validate(six, {1, 4}),
                       doctest::Contains("SizeExceedsBudget"), Error);
}
