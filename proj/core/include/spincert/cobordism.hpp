#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "spincert/framespin.hpp"
#include "spincert/int_matrix.hpp"

namespace spincert {

// Machine-checkable witness that [target] = 0 in Levine's matrix cobordism
// group. The congruence p exhibits a zero upper-left half block of
// target (+) stabilizer; the stabilizer is itself certified null-cobordant by
// stabilizer_witness, so adjoining it does not change the class.
struct SliceCertificate {
  IntMatrix target;
  IntMatrix stabilizer;
  IntMatrix stabilizer_witness;
  IntMatrix p;
  std::size_t half = 0;

  bool operator==(const SliceCertificate&) const = default;

  std::size_t stabilizer_rank() const { return stabilizer.rows(); }
  std::size_t witness_bit_size() const { return max_bit_size(p); }
};

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;  // first violated invariant when !ok
};

// Exact re-check of every certificate invariant; independent of how the
// certificate was produced.
VerifyResult verify_explain(const SliceCertificate& cert);
bool verify(const SliceCertificate& cert);

// Certificate for B (+) -B via the congruence [[I, I], [I, 0]].
SliceCertificate certify_pair_sum(const IntMatrix& b);

// The J of the middle-block reduction: returns (J, congruence(J, a_sigma))
// where the result is L_middle (+) [[0, C], [B, 0]]. Requires k odd.
std::pair<IntMatrix, IntMatrix> reduce_to_middle(const IntMatrix& a_sigma,
                                                 const BlockLayout& layout);

// Permutation certificate for a block anti-diagonal matrix whose middle block
// is absent or empty (k even, or trivial middle homology).
SliceCertificate certify_antidiagonal(const IntMatrix& a_sigma,
                                      const BlockLayout& layout);

// Certificate for a (x) tau with tau skew-symmetric unimodular (m = 2 mod 4):
// a symplectic basis for tau turns the product into [[0, *], [*, 0]].
SliceCertificate certify_tensor_skew(const IntMatrix& a, const IntMatrix& tau);

// Certificate for a (x) tau with tau symmetric unimodular of signature 0
// (m = 0 mod 4): stabilize by a (+) -a, diagonalize tau (+) 1 (+) -1, and
// cancel the resulting +-a pairs with the pair-sum congruence.
SliceCertificate certify_tensor_symmetric(const IntMatrix& a,
                                          const IntMatrix& tau);

// End-to-end pipeline: assemble the frame-spun Seifert matrix and certify it
// null-cobordant. Always returns a verified certificate on valid input.
SliceCertificate certify_frame_spin(const SpinInput& input);

// Certificate for target X given a congruence W with W X W' = cert.target.
SliceCertificate transport(const SliceCertificate& cert, const IntMatrix& w,
                           IntMatrix target);

// Certificate for the block sum of two certified targets.
SliceCertificate certify_block_sum(const SliceCertificate& c1,
                                   const SliceCertificate& c2);

}  // namespace spincert
