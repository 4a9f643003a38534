#pragma once

#include <random>
#include <utility>

#include "spincert/framespin.hpp"
#include "spincert/int_matrix.hpp"

namespace spincert::testsupport {

// Product of random elementary row operations applied to the identity;
// always det +-1.
IntMatrix random_unimodular(std::size_t n, std::mt19937& rng,
                            int op_count = 12, int max_coeff = 2);

// As random_unimodular, but also returns the exact inverse (accumulated
// from the inverse elementary operations).
std::pair<IntMatrix, IntMatrix> random_unimodular_pair(std::size_t n,
                                                       std::mt19937& rng,
                                                       int op_count = 12,
                                                       int max_coeff = 2);

// W S W' for the standard symplectic S of rank 2s.
IntMatrix random_skew_unimodular(std::size_t s, std::mt19937& rng);

// W D W' for D = diag(1,...,1,-1,...,-1) with u of each sign: symmetric,
// unimodular, odd type, signature 0.
IntMatrix random_odd_signature_zero(std::size_t u, std::mt19937& rng);

// Gram matrix of the E8 lattice: positive definite, even, det 1, signature 8.
IntMatrix e8_matrix();

// Ready-made inputs used by several tests: a (k=3, m=2) spin of a trefoil
// Seifert matrix over the torus, and a (k=3, m=4) spin with a rank-2
// hyperbolic symmetric middle pairing.
SpinInput trefoil_torus_input();
SpinInput figure8_hyperbolic_input();

}  // namespace spincert::testsupport
