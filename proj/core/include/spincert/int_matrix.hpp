#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spincert/errors.hpp"

namespace spincert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense exact-integer matrix, row major. 0x0 and 0xn are legal values.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  // P with P[i][perm[i]] = 1, so congruence(P, A)[i][j] = A[perm[i]][perm[j]].
  static IntMatrix permutation(const std::vector<std::size_t>& perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& other) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_zero() const;

  // Writes rows of src starting at (i0, j0).
  void paste(std::size_t i0, std::size_t j0, const IntMatrix& src);
  IntMatrix slice(std::size_t i0, std::size_t j0, std::size_t rows,
                  std::size_t cols) const;

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scale(const Int& c, const IntMatrix& a);

IntMatrix transpose(const IntMatrix& a);

// P * A * P'. Requires A square and P of matching size.
IntMatrix congruence(const IntMatrix& p, const IntMatrix& a);

// diag(a, b). Requires both square; 0x0 is the identity of the operation.
IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b);

// Kronecker product; the left factor's index varies slowest.
IntMatrix tensor(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination; det(0x0) = 1.
Int determinant(const IntMatrix& a);

// det = +-1.
bool is_unimodular(const IntMatrix& a);
bool is_integrally_invertible(const IntMatrix& p);

// Signature of a symmetric matrix, computed exactly over the rationals by
// symmetric pivoting with 1x1 and 2x2 pivots. Throws on non-symmetric input.
int signature(const IntMatrix& a);

// Inverse of an integrally invertible matrix. Throws if det is not +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

// Largest bit length among entries (0 for an empty or zero matrix).
std::size_t max_bit_size(const IntMatrix& a);

}  // namespace spincert
