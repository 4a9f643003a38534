#include <doctest.h>

#include "generators.hpp"
#include "spincert/framespin.hpp"

using namespace spincert;
using testsupport::figure8_hyperbolic_input;
using testsupport::trefoil_torus_input;

TEST_CASE("validate spin input") {
  CHECK_NOTHROW(validate(trefoil_torus_input()));
  CHECK_NOTHROW(validate(figure8_hyperbolic_input()));

  SpinInput bad_dims = trefoil_torus_input();
  bad_dims.dims.n = 3;
  CHECK_THROWS_WITH_AS(validate(bad_dims), doctest::Contains("2n + 1"),
                       Error);

  SpinInput bad_shape = trefoil_torus_input();
  bad_shape.linking[1] = IntMatrix{{1}};
  CHECK_THROWS_WITH_AS(validate(bad_shape), doctest::Contains("Lambda_1"),
                       Error);

  SpinInput asym_ranks = trefoil_torus_input();
  asym_ranks.m_ranks = {1, 2, 2};
  CHECK_THROWS_AS(validate(asym_ranks), Error);

  SpinInput e8_tau = figure8_hyperbolic_input();
  e8_tau.m_ranks = {1, 0, 8, 0, 1};
  e8_tau.intersection[2] = testsupport::e8_matrix();
  CHECK_THROWS_WITH_AS(validate(e8_tau),
                       doctest::Contains("NonzeroSignature"), Error);

  SpinInput skew_tau = trefoil_torus_input();
  skew_tau.intersection[1] = IntMatrix{{0, 1}, {1, 0}};
  CHECK_THROWS_WITH_AS(validate(skew_tau), doctest::Contains("NotSkew"),
                       Error);
}

TEST_CASE("assemble trefoil-torus") {
  auto [a_sigma, layout] = assemble(trefoil_torus_input());
  // Single summand a=1 of rank 2*2; sign exponent (mk+m)/4 = 2, so +1.
  CHECK(layout.summands.size() == 1);
  CHECK(layout.total == 4);
  CHECK(layout.middle_rank() == 4);
  CHECK(a_sigma == tensor(IntMatrix{{-1, 1}, {0, -1}},
                          IntMatrix{{0, 1}, {-1, 0}}));
  CHECK(a_sigma == middle_block(trefoil_torus_input()));
}

TEST_CASE("assemble superspin over a sphere is empty") {
  SpinInput in = trefoil_torus_input();
  in.m_ranks = {1, 0, 1};
  in.intersection.erase(1);
  auto [a_sigma, layout] = assemble(in);
  CHECK(a_sigma.rows() == 0);
  CHECK(layout.total == 0);
}

TEST_CASE("assemble reports non-realizable pairings") {
  SpinInput in = trefoil_torus_input();
  in.linking[1] = IntMatrix{{1, 1}, {1, 1}};  // Lambda - Lambda' singular
  CHECK_NOTHROW(validate(in));
  CHECK_THROWS_WITH_AS(assemble(in), doctest::Contains("NotUnimodularResult"),
                       Error);
}

TEST_CASE("middle_block") {
  SpinInput in = trefoil_torus_input();
  CHECK(middle_block(in) == tensor(IntMatrix{{-1, 1}, {0, -1}},
                                   IntMatrix{{0, 1}, {-1, 0}}));
  in.m_ranks = {1, 0, 1};
  in.intersection.erase(1);
  CHECK(middle_block(in) == IntMatrix());

  SpinInput even;
  even.dims = {4, 1, 2};
  even.v_ranks = {1, 1, 1, 0};
  even.m_ranks = {1, 1};
  even.linking[1] = IntMatrix{{1}};
  even.linking[2] = IntMatrix{{0}};
  even.intersection[0] = IntMatrix{{1}};
  even.intersection[1] = IntMatrix{{1}};
  CHECK_THROWS_WITH_AS(middle_block(even), doctest::Contains("KEven"), Error);
  CHECK_NOTHROW(assemble(even));
}

TEST_CASE("k=5 layout and vanishing rule") {
  SpinInput in;
  in.dims = {5, 2, 3};
  in.v_ranks = {1, 1, 2, 1, 0};
  in.m_ranks = {1, 2, 1};
  in.linking[1] = IntMatrix{{1}};
  in.linking[2] = IntMatrix{{0, 1}, {0, 1}};
  in.linking[3] = IntMatrix{{0}};
  in.intersection[0] = IntMatrix{{1}};
  in.intersection[1] = IntMatrix{{0, 1}, {-1, 0}};
  in.intersection[2] = IntMatrix{{1}};
  auto [a_sigma, layout] = assemble(in);

  CHECK(layout.summands.size() == 3);
  CHECK(layout.total == 6);
  CHECK(layout.middle_rank() == 4);

  // Nonzero entries only in blocks with a + c = k - 1.
  for (const auto& row : layout.summands)
    for (const auto& col : layout.summands) {
      IntMatrix block = a_sigma.slice(row.offset, col.offset, row.rank,
                                      col.rank);
      if (row.a + col.a != 4) CHECK(block.is_zero());
    }

  // Paired blocks are square of equal dimension.
  CHECK(layout.summands[0].rank == layout.summands[2].rank);
  CHECK(middle_block(in) ==
        a_sigma.slice(layout.summands[1].offset, layout.summands[1].offset,
                      4, 4));
}
