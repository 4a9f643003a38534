#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "spincert/int_matrix.hpp"

namespace spincert {

// Dimensions of a frame-spin: base knot S^{k-2} in S^k, spinning manifold
// M^m, resulting knot S^{2n-1} in S^{2n+1} with m + k = 2n + 1.
struct KnotDims {
  int k = 3;
  int m = 2;
  int n = 2;

  bool operator==(const KnotDims&) const = default;
};

// Algebraic input of a frame-spin: ranks of the free homology of the Seifert
// surface V and of M, the linking pairings of V between complementary
// dimensions, and the intersection pairings of M.
struct SpinInput {
  KnotDims dims;
  std::vector<std::size_t> v_ranks;        // r_a, a = 0..k-1
  std::vector<std::size_t> m_ranks;        // rho_b, b = 0..m
  std::map<int, IntMatrix> linking;        // a -> Lambda_a, shape r_a x r_{k-1-a}
  std::map<int, IntMatrix> intersection;   // b -> T_b, shape rho_b x rho_{m-b}

  bool operator==(const SpinInput&) const = default;
};

// Throws ShapeMismatch / NonzeroSignature / NotUnimodular /... on bad input.
void validate(const SpinInput& input);

// Lexicographic tensor-basis ordering of the summands F_{a, n-a}, a = 1..k-2,
// and their offsets in the assembled matrix.
struct BlockLayout {
  struct Summand {
    int a;             // V-degree
    int b;             // M-degree, b = n - a
    std::size_t rank;  // r_a * rho_b
    std::size_t offset;
  };
  int k = 3;
  std::vector<Summand> summands;
  std::size_t total = 0;

  bool has_middle() const { return k % 2 == 1; }
  // Rank of the middle summand a = (k-1)/2; zero when k is even.
  std::size_t middle_rank() const;
};

BlockLayout make_layout(const SpinInput& input);

// The Seifert matrix of the frame-spun knot: block anti-diagonal with block
// (a, c) = 0 unless a + c = k - 1, otherwise (-1)^{(m-b)(k-c)} Lambda_a (x) T_b
// with b = n - a. Post-checked for epsilon-unimodularity.
std::pair<IntMatrix, BlockLayout> assemble(const SpinInput& input);

// (-1)^{(mk+m)/4} Lambda_{(k-1)/2} (x) T_{m/2}; independent cross-check of
// the middle block of assemble(). Requires k odd.
IntMatrix middle_block(const SpinInput& input);

// Lambda_a with the convention that an absent entry of rank 0 x r or r x 0 is
// the empty matrix of that shape.
IntMatrix linking_matrix(const SpinInput& input, int a);
IntMatrix intersection_matrix(const SpinInput& input, int b);

}  // namespace spincert
