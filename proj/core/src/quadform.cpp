#include "spincert/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>

#include "spincert/detail/enumerate.hpp"

namespace spincert {

namespace {

// g = gcd(a, b) together with x a + y b = g. g >= 0 unless both are zero.
struct ExtGcd {
  Int g, x, y;
};

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
    old_y -= q * y;
    std::swap(old_y, y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

// Simultaneous unimodular row operation on the Gram matrix g (rows and
// columns) and on the accumulated basis q:
//   row_j1 <- c11 row_j1 + c12 row_j2,  row_j2 <- c21 row_j1 + c22 row_j2.
void apply_row_pair(IntMatrix& g, IntMatrix& q, std::size_t j1, std::size_t j2,
                    const Int& c11, const Int& c12, const Int& c21,
                    const Int& c22) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) {
    Int a = g.at(j1, k), b = g.at(j2, k);
    g.at(j1, k) = c11 * a + c12 * b;
    g.at(j2, k) = c21 * a + c22 * b;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Int a = g.at(k, j1), b = g.at(k, j2);
    g.at(k, j1) = c11 * a + c12 * b;
    g.at(k, j2) = c21 * a + c22 * b;
  }
  for (std::size_t k = 0; k < q.cols(); ++k) {
    Int a = q.at(j1, k), b = q.at(j2, k);
    q.at(j1, k) = c11 * a + c12 * b;
    q.at(j2, k) = c21 * a + c22 * b;
  }
}

void add_row_multiple(IntMatrix& g, IntMatrix& q, std::size_t dst,
                      std::size_t src, const Int& c) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) g.at(dst, k) += c * g.at(src, k);
  for (std::size_t k = 0; k < n; ++k) g.at(k, dst) += c * g.at(k, src);
  for (std::size_t k = 0; k < q.cols(); ++k) q.at(dst, k) += c * q.at(src, k);
}

void negate_row(IntMatrix& g, IntMatrix& q, std::size_t j) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) g.at(j, k) = -g.at(j, k);
  for (std::size_t k = 0; k < n; ++k) g.at(k, j) = -g.at(k, j);
  for (std::size_t k = 0; k < q.cols(); ++k) q.at(j, k) = -q.at(j, k);
}

// Greedy deterministic basis reduction: apply row ops b_j <- b_j - mu b_i
// while they strictly shrink the total entry size of the Gram matrix. Keeps
// the complement bases produced by unimodular completion from blowing up,
// which would push the unit vectors of later peels out of search range.
void size_reduce(IntMatrix& g, IntMatrix& q) {
  const std::size_t n = g.rows();
  if (n < 2) return;
  auto weight = [&] {
    Int w = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w += abs(g.at(i, j));
    return w;
  };
  Int best = weight();
  for (int pass = 0; pass < 1000; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<Int> candidates{1, -1};
        if (g.at(i, i) != 0) {
          Int mu = (2 * g.at(i, j) + g.at(i, i)) / (2 * g.at(i, i));
          if (mu != 0) candidates.push_back(mu);
        }
        for (const Int& mu : candidates) {
          add_row_multiple(g, q, j, i, -mu);
          Int w = weight();
          if (w < best) {
            best = w;
            changed = true;
          } else {
            add_row_multiple(g, q, j, i, mu);
          }
        }
      }
    if (!changed) break;
  }
}

Int evaluate_form(const IntMatrix& t, const std::vector<Int>& v) {
  Int val = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) val += v[i] * t.at(i, j) * v[j];
  }
  return val;
}

// Visits every v with v t v' == target and max-norm exactly radius, in
// balanced lexicographic order, until visit() returns true; returns the
// accepted vector.
template <typename Visit>
std::optional<std::vector<Int>> search_at_radius(const IntMatrix& t,
                                                 long target, long radius,
                                                 Visit&& visit) {
  const std::size_t n = t.rows();
  std::vector<Int> v(n, 0);
  std::optional<std::vector<Int>> hit;
  bool fits64 = max_bit_size(t) < 24 && n < 64;  // safe for int64 evaluation
  std::vector<long long> t64;
  if (fits64) {
    t64.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t64[i * n + j] = static_cast<long long>(t.at(i, j));
  }
  std::vector<long long> v64(n, 0);
  const std::size_t digits = detail::balanced_digit_count(radius);

  auto recurse = [&](auto&& self, std::size_t i, bool saturated) -> bool {
    if (i == n) {
      if (!saturated) return false;
      if (fits64) {
        long long val = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (v64[a] == 0) continue;
          for (std::size_t b = 0; b < n; ++b)
            val += v64[a] * t64[a * n + b] * v64[b];
        }
        if (val != target) return false;
      } else if (evaluate_form(t, v) != target) {
        return false;
      }
      if (!visit(std::as_const(v))) return false;
      hit = v;
      return true;
    }
    for (std::size_t d = 0; d < digits; ++d) {
      long c = detail::balanced_digit(d);
      v[i] = c;
      v64[i] = c;
      if (self(self, i + 1, saturated || std::abs(c) == radius)) return true;
    }
    v[i] = 0;
    v64[i] = 0;
    return false;
  };
  recurse(recurse, 0, false);
  return hit;
}

// Splits t as <+-1> (+) complement along the unit vector v.
FormWitness split_along(const IntMatrix& t, const std::vector<Int>& v) {
  const std::size_t n = t.rows();
  const Int delta = evaluate_form(t, v);

  IntMatrix q = complete_to_unimodular(v);
  // Make rows 1..n-1 orthogonal to v: u <- u - delta * (u t v') * v.
  for (std::size_t i = 1; i < n; ++i) {
    Int pairing = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        pairing += q.at(i, a) * t.at(a, b) * v[b];
    for (std::size_t a = 0; a < n; ++a) q.at(i, a) -= delta * pairing * v[a];
  }
  IntMatrix nf = congruence(q, t);
  if (nf.at(0, 0) != delta)
    throw Error(errc::internal_error, "unit split lost its pivot");
  for (std::size_t j = 1; j < n; ++j)
    if (nf.at(0, j) != 0 || nf.at(j, 0) != 0)
      throw Error(errc::internal_error, "unit split is not orthogonal");
  return FormWitness{std::move(q), std::move(nf)};
}

// Sparse variant of search_at_radius for ranks where full enumeration is
// intractable: visits vectors of support size 1, 2, ... (positions and
// balanced digits each in lexicographic order), max-norm exactly radius.
template <typename Visit>
std::optional<std::vector<Int>> search_support_at_radius(const IntMatrix& t,
                                                         long target,
                                                         long radius,
                                                         Visit&& visit) {
  const std::size_t n = t.rows();
  const std::size_t max_support = std::min<std::size_t>(n, 6);
  std::vector<Int> v(n, 0);
  std::vector<std::size_t> picked;
  std::optional<std::vector<Int>> hit;

  // Nonzero balanced digits up to the radius: 1, -1, 2, -2, ...
  std::vector<long> nonzero;
  for (long r = 1; r <= radius; ++r) {
    nonzero.push_back(r);
    nonzero.push_back(-r);
  }

  auto assign = [&](auto&& self, std::size_t idx, bool saturated) -> bool {
    if (idx == picked.size()) {
      if (!saturated) return false;
      Int val = 0;
      for (std::size_t a : picked)
        for (std::size_t b : picked) val += v[a] * t.at(a, b) * v[b];
      if (val != target) return false;
      if (!visit(std::as_const(v))) return false;
      hit = v;
      return true;
    }
    for (long c : nonzero) {
      v[picked[idx]] = c;
      if (self(self, idx + 1, saturated || std::abs(c) == radius)) return true;
    }
    v[picked[idx]] = 0;
    return false;
  };
  auto choose = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
    if (left == 0) return assign(assign, 0, false);
    for (std::size_t p = from; p + left <= n; ++p) {
      picked.push_back(p);
      if (self(self, p + 1, left - 1)) return true;
      picked.pop_back();
      v[p] = 0;
    }
    return false;
  };
  for (std::size_t support = 1; support <= max_support; ++support) {
    picked.clear();
    if (choose(choose, 0, support)) return hit;
  }
  return std::nullopt;
}

// First unit vector (in radius, then +1-before--1, then balanced-lex order)
// whose split passes accept(witness); accept-all gives the plain split.
// Small forms are searched exhaustively in balanced lexicographic order;
// when that is intractable the search falls back to sparse vectors first,
// still deterministically.
template <typename Accept>
std::pair<std::vector<Int>, FormWitness> split_unit_filtered(
    const IntMatrix& t, const UnitSearchOptions& opts, Accept&& accept) {
  const std::size_t n = t.rows();
  std::optional<FormWitness> witness;
  auto visit = [&](const std::vector<Int>& v) {
    FormWitness w = split_along(t, v);
    if (!accept(w)) return false;
    witness = std::move(w);
    return true;
  };
  for (long radius = 1; radius <= opts.max_radius; ++radius) {
    double full_cost = std::pow(2.0 * radius + 1.0, static_cast<double>(n));
    for (long target : opts.target_order) {
      std::optional<std::vector<Int>> found =
          full_cost <= 2e7 ? search_at_radius(t, target, radius, visit)
                           : search_support_at_radius(t, target, radius,
                                                      visit);
      if (found) return {*found, std::move(*witness)};
    }
  }
  throw Error(errc::search_budget_exceeded,
              "no unit vector within max-norm radius " +
                  std::to_string(opts.max_radius));
}

std::pair<std::vector<Int>, FormWitness> split_unit_impl(
    const IntMatrix& t, const UnitSearchOptions& opts) {
  return split_unit_filtered(t, opts, [](const FormWitness&) { return true; });
}

// Diagonalizes by peeling unit vectors; diagonal entries come out in peel
// order, not yet sorted.
FormWitness diagonalize_rec(const IntMatrix& t, const UnitSearchOptions& opts) {
  const std::size_t n = t.rows();
  if (n == 0) return FormWitness{IntMatrix(), IntMatrix()};
  if (n == 1) {
    if (t.at(0, 0) != 1 && t.at(0, 0) != -1)
      throw Error(errc::not_unimodular, "rank-1 remainder entry is not +-1");
    return FormWitness{IntMatrix::identity(1), t};
  }
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i)
    if (t.at(i, i) % 2 != 0) odd = true;
  if (!odd)
    throw Error(errc::precondition_failed,
                "even remainder cannot be diagonalized to +-1 summands");
  const int sig = signature(t);
  const bool definite = static_cast<std::size_t>(sig < 0 ? -sig : sig) == n;
  // Shrink the dominant sign first so the remainder stays indefinite for as
  // long as possible; only a pure-sign tail then ever turns definite.
  UnitSearchOptions level = opts;
  level.target_order = sig >= 0 ? std::array<long, 2>{1, -1}
                                : std::array<long, 2>{-1, 1};
  // Peel only along unit vectors whose complement is again odd (or of rank
  // <= 1, hence +-1 by unimodularity) and, unless the form is already a
  // definite tail, still indefinite; a greedy split can otherwise strand a
  // non-diagonalizable block such as a hyperbolic plane or a sum with an E8
  // lattice.
  auto [v, split] =
      split_unit_filtered(t, level, [n, definite](const FormWitness& w) {
        if (n - 1 <= 1) return true;
        bool comp_odd = false;
        for (std::size_t i = 1; i < n; ++i)
          if (w.normal_form.at(i, i) % 2 != 0) comp_odd = true;
        if (!comp_odd) return false;
        if (definite) return true;
        IntMatrix c = w.normal_form.slice(1, 1, n - 1, n - 1);
        int csig = signature(c);
        return static_cast<std::size_t>(csig < 0 ? -csig : csig) < n - 1;
      });
  IntMatrix complement = split.normal_form.slice(1, 1, n - 1, n - 1);
  IntMatrix red_q = IntMatrix::identity(n - 1);
  size_reduce(complement, red_q);
  FormWitness rest = diagonalize_rec(complement, opts);
  IntMatrix pivot = split.normal_form.slice(0, 0, 1, 1);
  IntMatrix q =
      block_sum(IntMatrix::identity(1), rest.q * red_q) * split.q;
  IntMatrix nf = block_sum(pivot, rest.normal_form);
  return FormWitness{std::move(q), std::move(nf)};
}

}  // namespace

IntMatrix complete_to_unimodular(const std::vector<Int>& v) {
  IntMatrix h(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) h.at(0, j) = v[j];
  return complete_rows_to_unimodular(h, v.size());
}

IntMatrix complete_rows_to_unimodular(const IntMatrix& h, std::size_t n) {
  const std::size_t k = h.rows();
  if (h.cols() != n || k > n)
    throw Error(errc::dimension_mismatch, "completion: bad row block shape");
  if (k == 0) return IntMatrix::identity(n);

  // Column-reduce h to lower triangular [L | 0] by unimodular column
  // operations, accumulating them in v so that h * v = [L | 0].
  IntMatrix m = h;
  IntMatrix v = IntMatrix::identity(n);
  auto col_combine = [&](std::size_t j1, std::size_t j2, const Int& c11,
                         const Int& c12, const Int& c21, const Int& c22) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Int a = m.at(i, j1), b = m.at(i, j2);
      m.at(i, j1) = c11 * a + c21 * b;
      m.at(i, j2) = c12 * a + c22 * b;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Int a = v.at(i, j1), b = v.at(i, j2);
      v.at(i, j1) = c11 * a + c21 * b;
      v.at(i, j2) = c12 * a + c22 * b;
    }
  };
  Int det_l = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, j) == 0) continue;
      ExtGcd e = ext_gcd(m.at(i, i), m.at(i, j));
      // columns (i, j): col_i <- x col_i + y col_j, col_j kills entry (i, j)
      col_combine(i, j, e.x, -(m.at(i, j) / e.g), e.y, m.at(i, i) / e.g);
    }
    if (m.at(i, i) == 0)
      throw Error(errc::not_unimodular, "completion: rows are not full rank");
    det_l *= m.at(i, i);
  }
  if (det_l != 1 && det_l != -1)
    throw Error(errc::not_unimodular, "completion: row span is not primitive");

  IntMatrix v_inv = inverse_unimodular(v);
  IntMatrix out(n, n);
  out.paste(0, 0, h);
  out.paste(k, 0, v_inv.slice(k, 0, n - k, n));
  if (!is_integrally_invertible(out))
    throw Error(errc::not_unimodular, "completion: result not unimodular");
  return out;
}

FormWitness symplectic_basis(const IntMatrix& t) {
  if (!t.is_square())
    throw Error(errc::dimension_mismatch, "symplectic_basis: not square");
  if (!t.is_skew_symmetric())
    throw Error(errc::not_skew, "symplectic_basis: form is not skew");
  const std::size_t n = t.rows();
  if (n % 2 != 0)
    throw Error(errc::odd_rank, "skew unimodular forms have even rank");
  if (!is_unimodular(t))
    throw Error(errc::not_unimodular,
                "symplectic_basis: determinant is not +-1");

  IntMatrix g = t;
  IntMatrix q = IntMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    if (g.at(i, i + 1) == 0) {
      std::size_t piv = i + 2;
      while (piv < n && g.at(i, piv) == 0) ++piv;
      if (piv == n)
        throw Error(errc::not_unimodular, "degenerate row in skew form");
      apply_row_pair(g, q, i + 1, piv, 0, 1, 1, 0);
    }
    // Accumulate gcd of row i into position (i, i+1), zeroing the rest.
    for (std::size_t j = i + 2; j < n; ++j) {
      if (g.at(i, j) == 0) continue;
      ExtGcd e = ext_gcd(g.at(i, i + 1), g.at(i, j));
      Int ad = g.at(i, i + 1) / e.g, bd = g.at(i, j) / e.g;
      apply_row_pair(g, q, i + 1, j, e.x, e.y, -bd, ad);
    }
    if (g.at(i, i + 1) == -1) negate_row(g, q, i + 1);
    if (g.at(i, i + 1) != 1)
      throw Error(errc::not_unimodular, "hyperbolic pairing gcd exceeds 1");
    // Split the hyperbolic pair off the remaining rows.
    for (std::size_t j = i + 2; j < n; ++j)
      if (g.at(j, i + 1) != 0) add_row_multiple(g, q, j, i, -g.at(j, i + 1));
  }

  // Reorder pairs (e_0, f_0, e_1, f_1, ...) into ((e_i), (f_i)).
  const std::size_t s = n / 2;
  std::vector<std::size_t> perm(n);
  for (std::size_t r = 0; r < s; ++r) {
    perm[r] = 2 * r;
    perm[s + r] = 2 * r + 1;
  }
  q = IntMatrix::permutation(perm) * q;

  IntMatrix nf = congruence(q, t);
  IntMatrix expected(n, n);
  expected.paste(0, s, IntMatrix::identity(s));
  expected.paste(s, 0, -IntMatrix::identity(s));
  if (nf != expected)
    throw Error(errc::internal_error,
                "symplectic reduction failed to reach the standard form");
  return FormWitness{std::move(q), std::move(nf)};
}

std::pair<std::vector<Int>, FormWitness> split_unit_vector(
    const IntMatrix& t, const UnitSearchOptions& opts) {
  if (!t.is_square() || !t.is_symmetric())
    throw Error(errc::precondition_failed, "split: form must be symmetric");
  if (!is_unimodular(t))
    throw Error(errc::precondition_failed, "split: form must be unimodular");
  bool odd = false;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.at(i, i) % 2 != 0) odd = true;
  if (!odd)
    throw Error(errc::precondition_failed, "split: form must be odd");
  int sig = signature(t);
  if (static_cast<std::size_t>(sig < 0 ? -sig : sig) >= t.rows())
    throw Error(errc::precondition_failed, "split: form must be indefinite");
  return split_unit_impl(t, opts);
}

FormWitness diagonalize_odd_indefinite(const IntMatrix& t,
                                       const UnitSearchOptions& opts) {
  if (!t.is_square() || !t.is_symmetric())
    throw Error(errc::precondition_failed,
                "diagonalize: form must be symmetric");
  if (!is_unimodular(t))
    throw Error(errc::precondition_failed,
                "diagonalize: form must be unimodular");
  const std::size_t n = t.rows();
  if (n > 1) {
    bool odd = false;
    for (std::size_t i = 0; i < n; ++i)
      if (t.at(i, i) % 2 != 0) odd = true;
    if (!odd)
      throw Error(errc::precondition_failed, "diagonalize: form must be odd");
    int sig = signature(t);
    if (static_cast<std::size_t>(sig < 0 ? -sig : sig) >= n)
      throw Error(errc::precondition_failed,
                  "diagonalize: form must be indefinite");
  }
  // Reduce the basis first: unit vectors of a badly presented form can
  // otherwise lie beyond any fixed search radius.
  IntMatrix reduced = t;
  IntMatrix pre_q = IntMatrix::identity(n);
  size_reduce(reduced, pre_q);
  FormWitness peeled = diagonalize_rec(reduced, opts);

  // Sort +1 entries before -1 entries.
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < n; ++i)
    (peeled.normal_form.at(i, i) > 0 ? plus : minus).push_back(i);
  std::vector<std::size_t> perm;
  perm.insert(perm.end(), plus.begin(), plus.end());
  perm.insert(perm.end(), minus.begin(), minus.end());
  IntMatrix q = IntMatrix::permutation(perm) * peeled.q * pre_q;
  IntMatrix nf = congruence(q, t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool diag_ok = i == j && nf.at(i, j) == (i < plus.size() ? 1 : -1);
      if (i != j ? nf.at(i, j) != 0 : !diag_ok)
        throw Error(errc::internal_error,
                    "diagonalization failed to reach diag(+-1)");
    }
  return FormWitness{std::move(q), std::move(nf)};
}

}  // namespace spincert
