#include "spincert/cobordism.hpp"

#include <cassert>

#include "spincert/quadform.hpp"

namespace spincert {

namespace {

// Permutation combining two zero-half-block matrices Z1 (+) Z2 (sizes 2*h1,
// 2*h2) into a single matrix with a zero (h1+h2) x (h1+h2) upper-left block.
IntMatrix zipper_perm(std::size_t h1, std::size_t h2) {
  std::vector<std::size_t> order;
  order.reserve(2 * (h1 + h2));
  for (std::size_t i = 0; i < h1; ++i) order.push_back(i);
  for (std::size_t i = 0; i < h2; ++i) order.push_back(2 * h1 + i);
  for (std::size_t i = 0; i < h1; ++i) order.push_back(h1 + i);
  for (std::size_t i = 0; i < h2; ++i) order.push_back(2 * h1 + h2 + i);
  return IntMatrix::permutation(order);
}

// S with S (A (x) B) S' = B (x) A for A p x p, B q x q.
IntMatrix kron_comm_perm(std::size_t p, std::size_t q) {
  std::vector<std::size_t> order(p * q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < p; ++i) order[j * p + i] = i * q + j;
  return IntMatrix::permutation(order);
}

// Pi with Pi ((A (x) B_0) (+) (A (x) B_1) (+) ...) Pi' = A (x) (B_0 (+) ...).
IntMatrix kron_split_perm(std::size_t p, const std::vector<std::size_t>& qs) {
  std::size_t q_total = 0;
  for (std::size_t q : qs) q_total += q;
  std::vector<std::size_t> order(p * q_total);
  std::size_t col_off = 0;    // offset of segment s inside the (+) B_s factor
  std::size_t block_off = 0;  // offset of A (x) B_s inside the block sum
  for (std::size_t q : qs) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j)
        order[i * q_total + col_off + j] = block_off + i * q + j;
    col_off += q;
    block_off += p * q;
  }
  return IntMatrix::permutation(order);
}

bool upper_left_zero(const IntMatrix& z, std::size_t half) {
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j)
      if (z.at(i, j) != 0) return false;
  return true;
}

void verify_or_throw(const SliceCertificate& cert, const char* where) {
  VerifyResult r = verify_explain(cert);
  if (!r.ok)
    throw Error(errc::internal_error,
                std::string(where) + " produced an invalid certificate: " +
                    r.diagnostic);
}

SliceCertificate trivial_certificate(IntMatrix target, std::size_t half) {
  const std::size_t n = target.rows();
  SliceCertificate cert{std::move(target), IntMatrix(), IntMatrix(),
                        IntMatrix::identity(n), half};
  return cert;
}

}  // namespace

VerifyResult verify_explain(const SliceCertificate& cert) {
  auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
  if (!cert.target.is_square()) return fail("target is not square");
  if (!cert.stabilizer.is_square()) return fail("stabilizer is not square");
  if (cert.stabilizer.rows() % 2 != 0)
    return fail("stabilizer has odd size");
  const std::size_t size = cert.target.rows() + cert.stabilizer.rows();
  if (size % 2 != 0) return fail("target (+) stabilizer has odd size");
  if (cert.half != size / 2) return fail("half does not equal size/2");
  if (cert.p.rows() != size || cert.p.cols() != size)
    return fail("p has the wrong shape");
  if (!is_integrally_invertible(cert.p)) return fail("det(p) != +-1");
  IntMatrix z = congruence(cert.p, block_sum(cert.target, cert.stabilizer));
  if (!upper_left_zero(z, cert.half))
    return fail("congruence(p, target (+) stabilizer) has a nonzero entry in "
                "its upper-left half block");
  const std::size_t s = cert.stabilizer.rows();
  if (cert.stabilizer_witness.rows() != s || cert.stabilizer_witness.cols() != s)
    return fail("stabilizer_witness has the wrong shape");
  if (s > 0) {
    if (!is_integrally_invertible(cert.stabilizer_witness))
      return fail("det(stabilizer_witness) != +-1");
    IntMatrix zs = congruence(cert.stabilizer_witness, cert.stabilizer);
    if (!upper_left_zero(zs, s / 2))
      return fail("stabilizer_witness does not exhibit a zero half block of "
                  "the stabilizer");
  }
  return {};
}

bool verify(const SliceCertificate& cert) { return verify_explain(cert).ok; }

SliceCertificate certify_pair_sum(const IntMatrix& b) {
  if (!b.is_square())
    throw Error(errc::dimension_mismatch, "certify_pair_sum: b not square");
  const std::size_t n = b.rows();
  IntMatrix p(2 * n, 2 * n);
  p.paste(0, 0, IntMatrix::identity(n));
  p.paste(0, n, IntMatrix::identity(n));
  p.paste(n, 0, IntMatrix::identity(n));
  SliceCertificate cert{block_sum(b, -b), IntMatrix(), IntMatrix(),
                        std::move(p), n};
  verify_or_throw(cert, "certify_pair_sum");
  return cert;
}

std::pair<IntMatrix, IntMatrix> reduce_to_middle(const IntMatrix& a_sigma,
                                                 const BlockLayout& layout) {
  if (layout.k % 2 == 0)
    throw Error(errc::k_even, "reduce_to_middle needs odd k");
  if (!a_sigma.is_square() || a_sigma.rows() != layout.total)
    throw Error(errc::layout_mismatch, "layout does not match the matrix");
  const int mid = (layout.k - 1) / 2;
  std::vector<std::size_t> order;
  order.reserve(layout.total);
  for (const auto& s : layout.summands)
    if (s.a == mid)
      for (std::size_t i = 0; i < s.rank; ++i) order.push_back(s.offset + i);
  for (const auto& s : layout.summands)
    if (s.a < mid)
      for (std::size_t i = 0; i < s.rank; ++i) order.push_back(s.offset + i);
  for (const auto& s : layout.summands)
    if (s.a > mid)
      for (std::size_t i = 0; i < s.rank; ++i) order.push_back(s.offset + i);
  IntMatrix j = IntMatrix::permutation(order);
  IntMatrix reduced = congruence(j, a_sigma);
  return {std::move(j), std::move(reduced)};
}

SliceCertificate certify_antidiagonal(const IntMatrix& a_sigma,
                                      const BlockLayout& layout) {
  if (!a_sigma.is_square() || a_sigma.rows() != layout.total)
    throw Error(errc::layout_mismatch, "layout does not match the matrix");
  if (layout.has_middle() && layout.middle_rank() > 0)
    throw Error(errc::middle_block_nonempty,
                "middle block is nonempty; use the k-odd pipeline");
  std::vector<std::size_t> order;
  order.reserve(layout.total);
  for (const auto& s : layout.summands)
    if (2 * s.a < layout.k - 1)
      for (std::size_t i = 0; i < s.rank; ++i) order.push_back(s.offset + i);
  const std::size_t first_half = order.size();
  for (const auto& s : layout.summands)
    if (2 * s.a >= layout.k - 1)
      for (std::size_t i = 0; i < s.rank; ++i) order.push_back(s.offset + i);
  if (2 * first_half != layout.total)
    throw Error(errc::layout_mismatch,
                "duality violated: summand pairs have unequal ranks");
  SliceCertificate cert{a_sigma, IntMatrix(), IntMatrix(),
                        IntMatrix::permutation(order), first_half};
  verify_or_throw(cert, "certify_antidiagonal");
  return cert;
}

SliceCertificate certify_tensor_skew(const IntMatrix& a,
                                     const IntMatrix& tau) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "certify_tensor_skew: a not square");
  FormWitness sw = symplectic_basis(tau);
  const std::size_t p_dim = a.rows();
  const std::size_t two_s = tau.rows();
  IntMatrix target = tensor(a, tau);
  // (I (x) q) then the factor-swap shuffle: a (x) tau becomes
  // [[0, I_s], [-I_s, 0]] (x) a, whose upper-left half is zero.
  IntMatrix p = kron_comm_perm(p_dim, two_s) *
                tensor(IntMatrix::identity(p_dim), sw.q);
  SliceCertificate cert{std::move(target), IntMatrix(), IntMatrix(),
                        std::move(p), p_dim * two_s / 2};
  verify_or_throw(cert, "certify_tensor_skew");
  return cert;
}

SliceCertificate certify_tensor_symmetric(const IntMatrix& a,
                                          const IntMatrix& tau) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch,
                "certify_tensor_symmetric: a not square");
  if (!tau.is_square() || !tau.is_symmetric())
    throw Error(errc::not_symmetric,
                "certify_tensor_symmetric: tau must be symmetric");
  if (!is_unimodular(tau))
    throw Error(errc::not_unimodular,
                "certify_tensor_symmetric: tau must be unimodular");
  if (signature(tau) != 0)
    throw Error(errc::nonzero_signature,
                "certify_tensor_symmetric: tau must have signature 0");

  const std::size_t p_dim = a.rows();
  const std::size_t t = tau.rows();
  const std::size_t u = (t + 2) / 2;  // signature 0 forces u = v

  IntMatrix stabilizer = block_sum(a, -a);
  SliceCertificate pair = certify_pair_sum(a);
  IntMatrix target = tensor(a, tau);

  // target (+) stabilizer, reordered, is a (x) (tau (+) 1 (+) -1).
  IntMatrix tau_stab = block_sum(tau, IntMatrix{{1}});
  tau_stab = block_sum(tau_stab, IntMatrix{{-1}});
  IntMatrix pi = kron_split_perm(p_dim, {t, 1, 1});

  FormWitness diag = diagonalize_odd_indefinite(tau_stab);
  IntMatrix w1 = tensor(IntMatrix::identity(p_dim), diag.q);
  IntMatrix shuffle = kron_comm_perm(p_dim, t + 2);

  // Now at (+)^u a (+) (+)^u -a; interleave the blocks into +- pairs.
  std::vector<std::size_t> pair_order;
  for (std::size_t i = 0; i < u; ++i) {
    for (std::size_t r = 0; r < p_dim; ++r)
      pair_order.push_back(i * p_dim + r);
    for (std::size_t r = 0; r < p_dim; ++r)
      pair_order.push_back((u + i) * p_dim + r);
  }
  IntMatrix interleave = IntMatrix::permutation(pair_order);

  // Pair-sum congruence on every a (+) -a pair, then gather the zero
  // quarter blocks of all pairs into one global half block.
  IntMatrix pair_sum;
  for (std::size_t i = 0; i < u; ++i) pair_sum = block_sum(pair_sum, pair.p);
  std::vector<std::size_t> gather;
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t r = 0; r < p_dim; ++r) gather.push_back(2 * i * p_dim + r);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t r = 0; r < p_dim; ++r)
      gather.push_back((2 * i + 1) * p_dim + r);
  IntMatrix gather_p = IntMatrix::permutation(gather);

  IntMatrix p_total =
      gather_p * pair_sum * interleave * shuffle * w1 * pi;
  SliceCertificate cert{std::move(target), std::move(stabilizer), pair.p,
                        std::move(p_total), u * p_dim};
  verify_or_throw(cert, "certify_tensor_symmetric");
  return cert;
}

SliceCertificate transport(const SliceCertificate& cert, const IntMatrix& w,
                           IntMatrix target) {
  IntMatrix p = cert.p * block_sum(w, IntMatrix::identity(
                                          cert.stabilizer.rows()));
  SliceCertificate out{std::move(target), cert.stabilizer,
                       cert.stabilizer_witness, std::move(p), cert.half};
  verify_or_throw(out, "transport");
  return out;
}

SliceCertificate certify_block_sum(const SliceCertificate& c1,
                                   const SliceCertificate& c2) {
  const std::size_t n1 = c1.target.rows(), n2 = c2.target.rows();
  const std::size_t s1 = c1.stabilizer.rows(), s2 = c2.stabilizer.rows();

  // Reorder t1 (+) t2 (+) st1 (+) st2 into (t1 (+) st1) (+) (t2 (+) st2).
  std::vector<std::size_t> regroup;
  for (std::size_t i = 0; i < n1; ++i) regroup.push_back(i);
  for (std::size_t i = 0; i < s1; ++i) regroup.push_back(n1 + n2 + i);
  for (std::size_t i = 0; i < n2; ++i) regroup.push_back(n1 + i);
  for (std::size_t i = 0; i < s2; ++i) regroup.push_back(n1 + n2 + s1 + i);
  IntMatrix p = zipper_perm(c1.half, c2.half) * block_sum(c1.p, c2.p) *
                IntMatrix::permutation(regroup);

  IntMatrix sw = zipper_perm(s1 / 2, s2 / 2) *
                 block_sum(c1.stabilizer_witness, c2.stabilizer_witness);
  SliceCertificate cert{block_sum(c1.target, c2.target),
                        block_sum(c1.stabilizer, c2.stabilizer),
                        std::move(sw), std::move(p), c1.half + c2.half};
  verify_or_throw(cert, "certify_block_sum");
  return cert;
}

SliceCertificate certify_frame_spin(const SpinInput& input) {
  auto [a_sigma, layout] = assemble(input);
  const auto [k, m, n] = input.dims;

  if (k % 2 == 0 || layout.middle_rank() == 0)
    return certify_antidiagonal(a_sigma, layout);

  auto [j, reduced] = reduce_to_middle(a_sigma, layout);
  const std::size_t nu = layout.middle_rank();
  const std::size_t mu = (layout.total - nu) / 2;
  IntMatrix l_mid = reduced.slice(0, 0, nu, nu);
  IntMatrix remainder = reduced.slice(nu, nu, 2 * mu, 2 * mu);

  IntMatrix lambda = linking_matrix(input, (k - 1) / 2);
  IntMatrix tau = intersection_matrix(input, m / 2);
  const long long exponent = static_cast<long long>(m) * (k + 1) / 4;

  SliceCertificate cert_mid =
      (m % 4 == 2)
          ? certify_tensor_skew(exponent % 2 != 0 ? -lambda : lambda, tau)
          : certify_tensor_symmetric(lambda, tau);  // sign is +1 for m = 0 mod 4
  if (cert_mid.target != l_mid)
    throw Error(errc::internal_error,
                "middle-block certificate does not match the assembled block");

  // The off-middle remainder [[0, C], [B, 0]] already has a zero half block.
  SliceCertificate cert_rest = trivial_certificate(remainder, mu);
  verify_or_throw(cert_rest, "off-middle remainder");

  SliceCertificate combined = certify_block_sum(cert_mid, cert_rest);
  return transport(combined, j, std::move(a_sigma));
}

}  // namespace spincert
