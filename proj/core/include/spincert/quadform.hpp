#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "spincert/int_matrix.hpp"

namespace spincert {

// Change of basis q (det +-1) together with the normal form it exhibits:
// congruence(q, input) == normal_form, re-verified at construction.
struct FormWitness {
  IntMatrix q;
  IntMatrix normal_form;

  std::size_t witness_bit_size() const { return max_bit_size(q); }
};

struct UnitSearchOptions {
  // Maximum max-norm radius tried before erroring with SearchBudgetExceeded.
  long max_radius = 10;
  // Order in which the two unit values are searched at each radius.
  std::array<long, 2> target_order{1, -1};
};

// Symplectic normal form of a skew-symmetric unimodular form:
// normal_form = [[0, I_s], [-I_s, 0]] with 2s = rank.
FormWitness symplectic_basis(const IntMatrix& t);

// Splits an odd indefinite unimodular symmetric form as <+-1> (+) complement.
// Returns the unit vector v (v t v' = +-1) together with a witness whose
// normal form is the split. Vectors are searched in increasing max-norm
// radius, +1 values before -1, then in balanced lexicographic order.
std::pair<std::vector<Int>, FormWitness> split_unit_vector(
    const IntMatrix& t, const UnitSearchOptions& opts = {});

// diag(1,...,1,-1,...,-1) with u - v = signature, u + v = rank.
FormWitness diagonalize_odd_indefinite(const IntMatrix& t,
                                       const UnitSearchOptions& opts = {});

// Completes a primitive integer row vector to a matrix with det +-1 whose
// first row is v.
IntMatrix complete_to_unimodular(const std::vector<Int>& v);

// Extends a full-rank h x n matrix of rows spanning a primitive sublattice
// to an n x n matrix with det +-1 whose first h rows equal the input.
// Throws NotUnimodular when the row span is not primitive.
IntMatrix complete_rows_to_unimodular(const IntMatrix& h, std::size_t n);

}  // namespace spincert
