#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "spincert/seifert.hpp"

using namespace spincert;
using testsupport::e8_matrix;

namespace {

const IntMatrix kTrefoil{{-1, 1}, {0, -1}};

// Upper-triangular A with A + A' equal to the E8 Gram matrix.
IntMatrix e8_half() {
  IntMatrix e8 = e8_matrix();
  IntMatrix a(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    a.at(i, i) = 1;
    for (std::size_t j = i + 1; j < 8; ++j) a.at(i, j) = e8.at(i, j);
  }
  return a;
}

}  // namespace

TEST_CASE("validate_seifert") {
  SeifertData s = validate_seifert(kTrefoil, 1);
  CHECK(s.epsilon == -1);
  CHECK(epsilon_symmetrization(s) == IntMatrix{{0, 1}, {-1, 0}});

  CHECK_NOTHROW(validate_seifert(IntMatrix(), 1));
  CHECK_NOTHROW(validate_seifert(IntMatrix(), 2));
  CHECK_NOTHROW(validate_seifert(IntMatrix{{0, 1}, {0, 0}}, 2));
  CHECK_THROWS_WITH_AS(validate_seifert(IntMatrix{{0}}, 2),
                       doctest::Contains("NotUnimodular"), Error);
}

TEST_CASE("validate_seifert respects block sums") {
  std::mt19937 rng(31);
  IntMatrix a = kTrefoil;
  IntMatrix b = congruence(testsupport::random_unimodular(2, rng), kTrefoil);
  for (int n : {1, 2}) {
    bool a_ok = true, b_ok = true;
    try { validate_seifert(a, n); } catch (const Error&) { a_ok = false; }
    try { validate_seifert(b, n); } catch (const Error&) { b_ok = false; }
    if (a_ok && b_ok) CHECK_NOTHROW(validate_seifert(block_sum(a, b), n));
  }
}

TEST_CASE("epsilon_symmetrization") {
  SeifertData odd = validate_seifert(kTrefoil, 1);
  CHECK(epsilon_symmetrization(odd) == IntMatrix{{0, 1}, {-1, 0}});
  // Unvalidated even-parity data still symmetrizes mechanically.
  CHECK(epsilon_symmetrization(SeifertData{kTrefoil, 2, 1}) ==
        IntMatrix{{-2, 1}, {1, -2}});
  CHECK(epsilon_symmetrization(validate_seifert(IntMatrix(), 1)) ==
        IntMatrix());
  CHECK(epsilon_symmetrization(SeifertData{IntMatrix{{1}}, 2, 1}) ==
        IntMatrix{{2}});

  // X' = epsilon X for X = A + epsilon A'.
  for (int epsilon : {1, -1}) {
    SeifertData s{kTrefoil, epsilon == 1 ? 2 : 1, epsilon};
    IntMatrix x = epsilon_symmetrization(s);
    CHECK(transpose(x) == scale(epsilon, x));
  }
}

TEST_CASE("levine_signature_residue") {
  CHECK(levine_signature_residue(validate_seifert(IntMatrix(), 2)) == 0);
  CHECK(levine_signature_residue(SeifertData{IntMatrix{{1}}, 2, 1}) == 1);
  CHECK(levine_signature_residue(validate_seifert(e8_half(), 2)) == 8);
  CHECK_THROWS_WITH_AS(
      levine_signature_residue(validate_seifert(kTrefoil, 1)),
      doctest::Contains("WrongParity"), Error);

  // Residue is a congruence invariant.
  std::mt19937 rng(37);
  IntMatrix p = testsupport::random_unimodular(8, rng);
  SeifertData moved = validate_seifert(congruence(p, e8_half()), 2);
  CHECK(levine_signature_residue(moved) == 8);
}

TEST_CASE("slice dispatch") {
  CHECK(even_dimensional_slice(4) == SliceDispatch::slice_by_kervaire);
  CHECK(even_dimensional_slice(2) == SliceDispatch::slice_by_kervaire);
  CHECK(even_dimensional_slice(5) == SliceDispatch::needs_matrix);
  CHECK(slice_dispatch_message(SliceDispatch::slice_by_kervaire) ==
        "slice by Kervaire");
  CHECK(slice_dispatch_message(SliceDispatch::needs_matrix) ==
        "use matrix machinery");
}
