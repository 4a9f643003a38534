#include "spincert/int_matrix.hpp"

#include <sstream>

namespace spincert {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_skew: return "NotSkew";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::odd_rank: return "OddRank";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::wrong_parity: return "WrongParity";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_unimodular_result: return "NotUnimodularResult";
    case errc::k_even: return "KEven";
    case errc::layout_mismatch: return "LayoutMismatch";
    case errc::middle_block_nonempty: return "MiddleBlockNonEmpty";
    case errc::nonzero_signature: return "NonzeroSignature";
    case errc::odd_size: return "OddSize";
    case errc::size_exceeds_budget: return "SizeExceedsBudget";
    case errc::syntax_error: return "SyntaxError";
    case errc::schema_error: return "SchemaError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(0) {
  for (const auto& row : rows) {
    if (cols_ == 0) cols_ = row.size();
    if (row.size() != cols_)
      throw Error(errc::dimension_mismatch, "ragged initializer rows");
    for (long long v : row) entries_.emplace_back(v);
  }
  if (rows_ == 0) cols_ = 0;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.at(i, perm[i]) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

void IntMatrix::paste(std::size_t i0, std::size_t j0, const IntMatrix& src) {
  if (i0 + src.rows() > rows_ || j0 + src.cols() > cols_)
    throw Error(errc::dimension_mismatch, "paste out of range");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j)
      at(i0 + i, j0 + j) = src.at(i, j);
}

IntMatrix IntMatrix::slice(std::size_t i0, std::size_t j0, std::size_t rows,
                           std::size_t cols) const {
  if (i0 + rows > rows_ || j0 + cols > cols_)
    throw Error(errc::dimension_mismatch, "slice out of range");
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(i0 + i, j0 + j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(errc::dimension_mismatch, "multiply: inner dims differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  return multiply(a, b);
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = -a.at(i, j);
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(errc::dimension_mismatch, "add: shapes differ");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  return a + (-b);
}

IntMatrix scale(const Int& c, const IntMatrix& a) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = c * a.at(i, j);
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

IntMatrix congruence(const IntMatrix& p, const IntMatrix& a) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "congruence: a not square");
  if (p.rows() != p.cols() || p.cols() != a.rows())
    throw Error(errc::dimension_mismatch, "congruence: p does not match a");
  return multiply(multiply(p, a), transpose(p));
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square())
    throw Error(errc::dimension_mismatch, "block_sum: inputs must be square");
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

IntMatrix tensor(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& aij = a.at(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return out;
}

Int determinant(const IntMatrix& a) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  Int d = determinant(a);
  return d == 1 || d == -1;
}

bool is_integrally_invertible(const IntMatrix& p) { return is_unimodular(p); }

int signature(const IntMatrix& a) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "signature: not square");
  if (!a.is_symmetric())
    throw Error(errc::not_symmetric, "signature: matrix must be symmetric");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back(i);
  int sig = 0;
  while (!active.empty()) {
    // Prefer a nonzero 1x1 diagonal pivot.
    std::size_t pivot = n;
    for (std::size_t i : active)
      if (m[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot != n) {
      sig += m[pivot][pivot] > 0 ? 1 : -1;
      const Rat d = m[pivot][pivot];
      std::vector<std::size_t> rest;
      for (std::size_t i : active)
        if (i != pivot) rest.push_back(i);
      for (std::size_t i : rest)
        for (std::size_t j : rest) m[i][j] -= m[i][pivot] * m[pivot][j] / d;
      active = std::move(rest);
      continue;
    }
    // All active diagonals are zero: a 2x2 pivot [0 b; b 0] contributes 0.
    std::size_t pi = n, pj = n;
    for (std::size_t i : active) {
      for (std::size_t j : active)
        if (i != j && m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      if (pi != n) break;
    }
    if (pi == n) break;  // remaining form is zero
    const Rat b = m[pi][pj];
    std::vector<std::size_t> rest;
    for (std::size_t i : active)
      if (i != pi && i != pj) rest.push_back(i);
    for (std::size_t k : rest)
      for (std::size_t l : rest)
        m[k][l] -= (m[k][pi] * m[pj][l] + m[k][pj] * m[pi][l]) / b;
    active = std::move(rest);
  }
  return sig;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "inverse: not square");
  const std::size_t n = a.rows();
  // Gauss-Jordan over the rationals; entries of the result must be integers
  // because det(a) = +-1.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw Error(errc::not_unimodular, "inverse: singular matrix");
    std::swap(m[k], m[piv]);
    const Rat d = m[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) m[k][j] /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rat f = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = m[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw Error(errc::not_unimodular, "inverse: not integrally invertible");
      out.at(i, j) = boost::multiprecision::numerator(v);
    }
  return out;
}

std::size_t max_bit_size(const IntMatrix& a) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      bits = std::max(bits, static_cast<std::size_t>(
                                boost::multiprecision::msb(abs(v)) + 1));
    }
  return bits;
}

}  // namespace spincert
