#pragma once

#include <string>

#include "spincert/int_matrix.hpp"

namespace spincert {

// Seifert matrix of a knot S^{2n-1} in S^{2n+1} with epsilon = (-1)^n.
// Valid only when a + epsilon a' is integrally unimodular.
struct SeifertData {
  IntMatrix a;
  int n = 1;
  int epsilon = -1;
};

// Checks the unimodularity condition and returns validated data.
SeifertData validate_seifert(const IntMatrix& a, int n);

// a + (-1)^n a', the intersection form of the Seifert surface.
IntMatrix epsilon_symmetrization(const SeifertData& s);

// signature(a + a') mod 16; requires n even. Residue 0 is the necessary
// condition for realizability when n = 2.
int levine_signature_residue(const SeifertData& s);

enum class SliceDispatch {
  slice_by_kervaire,  // even-dimensional knot: slice with no matrix work
  needs_matrix,       // odd-dimensional: run the certificate pipeline
};

// Dispatch on the ambient sphere dimension k of a knot S^{k-2} in S^k.
SliceDispatch even_dimensional_slice(int k);
std::string slice_dispatch_message(SliceDispatch d);

}  // namespace spincert
