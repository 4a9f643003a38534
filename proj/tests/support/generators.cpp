#include "generators.hpp"

namespace spincert::testsupport {

IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int op_count,
                            int max_coeff) {
  IntMatrix w = IntMatrix::identity(n);
  if (n < 2) return w;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int t = 0; t < op_count; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      if (kind(rng) == 0)
        for (std::size_t c = 0; c < n; ++c) w.at(i, c) = -w.at(i, c);
      continue;
    }
    int which = kind(rng);
    if (which == 3) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(i, c), w.at(j, c));
    } else {
      Int f = coeff(rng);
      for (std::size_t c = 0; c < n; ++c) w.at(j, c) += f * w.at(i, c);
    }
  }
  return w;
}

std::pair<IntMatrix, IntMatrix> random_unimodular_pair(std::size_t n,
                                                       std::mt19937& rng,
                                                       int op_count,
                                                       int max_coeff) {
  IntMatrix w = IntMatrix::identity(n);
  IntMatrix winv = IntMatrix::identity(n);
  if (n < 2) return {w, winv};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  for (int t = 0; t < op_count; ++t) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int c = coeff(rng);
    if (c == 0) c = 1;
    // Row op on w; the inverse accumulates the opposite op as a column op.
    for (std::size_t k = 0; k < n; ++k) w.at(i, k) += c * w.at(j, k);
    for (std::size_t k = 0; k < n; ++k) winv.at(k, j) -= c * winv.at(k, i);
  }
  return {w, winv};
}

IntMatrix random_skew_unimodular(std::size_t s, std::mt19937& rng) {
  IntMatrix base(2 * s, 2 * s);
  for (std::size_t i = 0; i < s; ++i) {
    base.at(i, s + i) = 1;
    base.at(s + i, i) = -1;
  }
  return congruence(random_unimodular(2 * s, rng), base);
}

IntMatrix random_odd_signature_zero(std::size_t u, std::mt19937& rng) {
  IntMatrix base(2 * u, 2 * u);
  for (std::size_t i = 0; i < u; ++i) {
    base.at(i, i) = 1;
    base.at(u + i, u + i) = -1;
  }
  return congruence(random_unimodular(2 * u, rng), base);
}

IntMatrix e8_matrix() {
  // Dynkin chain 1-2-...-7 with node 8 attached to node 5.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = 2;
  for (std::size_t i = 0; i + 1 < 7; ++i) {
    g.at(i, i + 1) = -1;
    g.at(i + 1, i) = -1;
  }
  g.at(4, 7) = -1;
  g.at(7, 4) = -1;
  return g;
}

SpinInput trefoil_torus_input() {
  SpinInput in;
  in.dims = {3, 2, 2};
  in.v_ranks = {1, 2, 0};
  in.m_ranks = {1, 2, 1};
  in.linking[1] = IntMatrix{{-1, 1}, {0, -1}};
  in.intersection[0] = IntMatrix{{1}};
  in.intersection[1] = IntMatrix{{0, 1}, {-1, 0}};
  in.intersection[2] = IntMatrix{{1}};
  return in;
}

SpinInput figure8_hyperbolic_input() {
  SpinInput in;
  in.dims = {3, 4, 3};
  in.v_ranks = {1, 2, 0};
  in.m_ranks = {1, 0, 2, 0, 1};
  in.linking[1] = IntMatrix{{1, 1}, {0, -1}};
  in.intersection[0] = IntMatrix{{1}};
  in.intersection[2] = IntMatrix{{0, 1}, {1, 0}};
  in.intersection[4] = IntMatrix{{1}};
  return in;
}

}  // namespace spincert::testsupport
