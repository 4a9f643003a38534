#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "spincert/quadform.hpp"

using namespace spincert;
using testsupport::e8_matrix;

namespace {

IntMatrix standard_symplectic(std::size_t s) {
  IntMatrix f(2 * s, 2 * s);
  for (std::size_t i = 0; i < s; ++i) {
    f.at(i, s + i) = 1;
    f.at(s + i, i) = -1;
  }
  return f;
}

}  // namespace

TEST_CASE("symplectic_basis") {
  IntMatrix symp{{0, 1}, {-1, 0}};
  FormWitness w = symplectic_basis(symp);
  CHECK(w.normal_form == symp);
  CHECK(w.q == IntMatrix::identity(2));

  FormWitness flipped = symplectic_basis(IntMatrix{{0, -1}, {1, 0}});
  CHECK(flipped.normal_form == symp);
  CHECK(congruence(flipped.q, IntMatrix{{0, -1}, {1, 0}}) == symp);

  CHECK_THROWS_WITH_AS(symplectic_basis(IntMatrix{{0, 2}, {-2, 0}}),
                       doctest::Contains("NotUnimodular"), Error);
  CHECK_THROWS_WITH_AS(symplectic_basis(IntMatrix{{1}}),
                       doctest::Contains("NotSkew"), Error);
  CHECK_THROWS_AS(symplectic_basis(IntMatrix(3, 3)), Error);
}

TEST_CASE("symplectic_basis normal form depends only on rank") {
  std::mt19937 rng(23);
  for (std::size_t s = 1; s <= 3; ++s) {
    IntMatrix t = testsupport::random_skew_unimodular(s, rng);
    FormWitness w = symplectic_basis(t);
    CHECK(w.normal_form == standard_symplectic(s));
    CHECK(congruence(w.q, t) == w.normal_form);
    CHECK(is_integrally_invertible(w.q));
  }
}

TEST_CASE("split_unit_vector") {
  auto [v, w] = split_unit_vector(IntMatrix{{1, 0}, {0, -1}});
  CHECK(v == std::vector<Int>{1, 0});
  CHECK(w.normal_form == IntMatrix{{1, 0}, {0, -1}});

  auto [v2, w2] = split_unit_vector(IntMatrix{{0, 1}, {1, 1}});
  CHECK(v2 == std::vector<Int>{0, 1});
  CHECK(congruence(w2.q, IntMatrix{{0, 1}, {1, 1}}) == w2.normal_form);

  CHECK_THROWS_WITH_AS(split_unit_vector(IntMatrix{{2, 0}, {0, 2}}),
                       doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("diagonalize_odd_indefinite") {
  IntMatrix d{{1, 0}, {0, -1}};
  FormWitness w = diagonalize_odd_indefinite(d);
  CHECK(w.normal_form == d);
  CHECK(w.q == IntMatrix::identity(2));

  IntMatrix h3 = block_sum(IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{1}});
  FormWitness w3 = diagonalize_odd_indefinite(h3);
  CHECK(w3.normal_form == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  CHECK(congruence(w3.q, h3) == w3.normal_form);

  IntMatrix e9 = block_sum(e8_matrix(), IntMatrix{{-1}});
  FormWitness w9 = diagonalize_odd_indefinite(e9);
  IntMatrix expected(9, 9);
  for (std::size_t i = 0; i < 8; ++i) expected.at(i, i) = 1;
  expected.at(8, 8) = -1;
  CHECK(w9.normal_form == expected);
  CHECK(congruence(w9.q, e9) == w9.normal_form);
}

TEST_CASE("diagonalize randomized") {
  std::mt19937 rng(29);
  for (int t = 0; t < 25; ++t) {
    IntMatrix x = testsupport::random_odd_signature_zero(1 + t % 3, rng);
    FormWitness w = diagonalize_odd_indefinite(x);
    CHECK(congruence(w.q, x) == w.normal_form);
    CHECK(is_integrally_invertible(w.q));
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < w.normal_form.rows(); ++i) {
      if (w.normal_form.at(i, i) == 1) ++pos;
      if (w.normal_form.at(i, i) == -1) ++neg;
    }
    CHECK(pos + neg == static_cast<int>(x.rows()));
    CHECK(pos - neg == signature(x));
  }
}

TEST_CASE("complete_to_unimodular") {
  IntMatrix p = complete_to_unimodular({6, 10, 15});
  CHECK(is_integrally_invertible(p));
  CHECK(p.at(0, 0) == 6);
  CHECK(p.at(0, 1) == 10);
  CHECK(p.at(0, 2) == 15);
}

TEST_CASE("complete_rows_to_unimodular") {
  IntMatrix h{{1, 0, 2}, {0, 1, 3}};
  IntMatrix p = complete_rows_to_unimodular(h, 3);
  CHECK(is_integrally_invertible(p));
  CHECK(p.slice(0, 0, 2, 3) == h);

  // Non-primitive span: 2 * e1.
  CHECK_THROWS_AS(complete_rows_to_unimodular(IntMatrix{{2, 0}}, 2), Error);
}
