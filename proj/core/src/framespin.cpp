#include "spincert/framespin.hpp"

#include <string>

namespace spincert {

namespace {

std::size_t rank_or_zero(const std::vector<std::size_t>& ranks, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= ranks.size()) return 0;
  return ranks[i];
}

}  // namespace

std::size_t BlockLayout::middle_rank() const {
  if (!has_middle()) return 0;
  const int mid = (k - 1) / 2;
  for (const auto& s : summands)
    if (s.a == mid) return s.rank;
  return 0;
}

IntMatrix linking_matrix(const SpinInput& input, int a) {
  auto it = input.linking.find(a);
  if (it != input.linking.end()) return it->second;
  return IntMatrix(rank_or_zero(input.v_ranks, a),
                   rank_or_zero(input.v_ranks, input.dims.k - 1 - a));
}

IntMatrix intersection_matrix(const SpinInput& input, int b) {
  auto it = input.intersection.find(b);
  if (it != input.intersection.end()) return it->second;
  return IntMatrix(rank_or_zero(input.m_ranks, b),
                   rank_or_zero(input.m_ranks, input.dims.m - b));
}

void validate(const SpinInput& input) {
  const auto [k, m, n] = input.dims;
  if (k < 3) throw Error(errc::schema_error, "k must be >= 3");
  if (m < 1) throw Error(errc::schema_error, "m must be >= 1");
  if (m + k != 2 * n + 1)
    throw Error(errc::schema_error, "dims must satisfy m + k = 2n + 1");

  if (input.v_ranks.size() != static_cast<std::size_t>(k))
    throw Error(errc::shape_mismatch, "v_ranks must list r_0..r_{k-1}");
  if (input.v_ranks[0] != 1)
    throw Error(errc::shape_mismatch, "r_0 must be 1");
  if (input.v_ranks[k - 1] != 0)
    throw Error(errc::shape_mismatch, "r_{k-1} must be 0");
  for (int a = 1; a <= k - 2; ++a)
    if (input.v_ranks[a] != input.v_ranks[k - 1 - a])
      throw Error(errc::shape_mismatch,
                  "Poincare duality requires r_a = r_{k-1-a}");

  if (input.m_ranks.size() != static_cast<std::size_t>(m) + 1)
    throw Error(errc::shape_mismatch, "m_ranks must list rho_0..rho_m");
  for (int b = 0; b <= m; ++b)
    if (input.m_ranks[b] != input.m_ranks[m - b])
      throw Error(errc::shape_mismatch,
                  "Poincare duality requires rho_b = rho_{m-b}");

  for (const auto& [a, mat] : input.linking) {
    if (a < 1 || a > k - 2)
      throw Error(errc::shape_mismatch,
                  "linking index " + std::to_string(a) + " out of range");
    if (mat.rows() != input.v_ranks[a] || mat.cols() != input.v_ranks[k - 1 - a])
      throw Error(errc::shape_mismatch,
                  "Lambda_" + std::to_string(a) + " must be r_a x r_{k-1-a}");
  }
  for (int a = 1; a <= k - 2; ++a)
    if (input.v_ranks[a] != 0 && !input.linking.contains(a))
      throw Error(errc::shape_mismatch,
                  "missing Lambda_" + std::to_string(a));

  for (const auto& [b, mat] : input.intersection) {
    if (b < 0 || b > m)
      throw Error(errc::shape_mismatch,
                  "intersection index " + std::to_string(b) + " out of range");
    if (mat.rows() != input.m_ranks[b] || mat.cols() != input.m_ranks[m - b])
      throw Error(errc::shape_mismatch,
                  "T_" + std::to_string(b) + " must be rho_b x rho_{m-b}");
  }
  for (int b = 0; b <= m; ++b)
    if (input.m_ranks[b] != 0 && !input.intersection.contains(b))
      throw Error(errc::shape_mismatch, "missing T_" + std::to_string(b));

  if (m % 2 == 0) {
    IntMatrix tau = intersection_matrix(input, m / 2);
    if (m % 4 == 0) {
      if (!tau.is_symmetric())
        throw Error(errc::not_symmetric,
                    "T_{m/2} must be symmetric when m = 0 mod 4");
      if (!is_unimodular(tau))
        throw Error(errc::not_unimodular, "T_{m/2} must be unimodular");
      if (signature(tau) != 0)
        throw Error(errc::nonzero_signature,
                    "closed framed M must have signature 0");
    } else {
      if (!tau.is_skew_symmetric())
        throw Error(errc::not_skew,
                    "T_{m/2} must be skew-symmetric when m = 2 mod 4");
      if (!is_unimodular(tau))
        throw Error(errc::not_unimodular, "T_{m/2} must be unimodular");
    }
  }
}

BlockLayout make_layout(const SpinInput& input) {
  const auto [k, m, n] = input.dims;
  BlockLayout layout;
  layout.k = k;
  std::size_t offset = 0;
  for (int a = 1; a <= k - 2; ++a) {
    const int b = n - a;
    const std::size_t rank =
        rank_or_zero(input.v_ranks, a) * rank_or_zero(input.m_ranks, b);
    layout.summands.push_back({a, b, rank, offset});
    offset += rank;
  }
  layout.total = offset;
  return layout;
}

std::pair<IntMatrix, BlockLayout> assemble(const SpinInput& input) {
  validate(input);
  const auto [k, m, n] = input.dims;
  BlockLayout layout = make_layout(input);
  IntMatrix out(layout.total, layout.total);

  for (const auto& row : layout.summands) {
    const int a = row.a;
    const int c = k - 1 - a;  // only a + c = k - 1 blocks are nonzero
    const int b = row.b;
    if (row.rank == 0) continue;
    const auto& col = layout.summands[c - 1];
    if (col.rank == 0) continue;
    IntMatrix block = tensor(linking_matrix(input, a),
                             intersection_matrix(input, b));
    const long long exponent =
        static_cast<long long>(m - b) * static_cast<long long>(k - c);
    if (exponent % 2 != 0) block = -block;
    out.paste(row.offset, col.offset, block);
  }

  const int epsilon = (n % 2 == 0) ? 1 : -1;
  IntMatrix sym = epsilon == 1 ? out + transpose(out) : out - transpose(out);
  if (!is_unimodular(sym))
    throw Error(errc::not_unimodular_result,
                "assembled matrix fails the unimodularity condition; input "
                "pairings are not realizable");
  return {std::move(out), std::move(layout)};
}

IntMatrix middle_block(const SpinInput& input) {
  const auto [k, m, n] = input.dims;
  if (k % 2 == 0)
    throw Error(errc::k_even, "middle block exists only for odd k");
  IntMatrix block = tensor(linking_matrix(input, (k - 1) / 2),
                           intersection_matrix(input, m / 2));
  // (mk + m)/4 = m(k+1)/4, integral since k is odd and m even.
  const long long exponent = static_cast<long long>(m) * (k + 1) / 4;
  return exponent % 2 != 0 ? -block : block;
}

}  // namespace spincert
