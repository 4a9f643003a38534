#pragma once

#include <cstddef>
#include <optional>

#include "spincert/cobordism.hpp"
#include "spincert/int_matrix.hpp"

namespace spincert {

struct SearchBudget {
  long max_entry = 3;        // bound on the searched half-basis entries
  std::size_t max_size = 4;  // largest matrix size searched (<= 6)
};

// Exhaustive search for a congruence witness exhibiting a zero upper-left
// half block: enumerates primitive isotropic half-rank row spans in balanced
// lexicographic order and completes the first hit to a unimodular matrix.
// Returns absent when no witness exists within the budget.
std::optional<IntMatrix> search_null_cobordant(const IntMatrix& x,
                                               const SearchBudget& budget);

// True iff the certificate verifies and the oracle independently finds a
// witness for target (+) stabilizer.
bool cross_validate(const SliceCertificate& cert, const SearchBudget& budget);

}  // namespace spincert
