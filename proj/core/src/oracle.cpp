#include "spincert/oracle.hpp"

#include "spincert/detail/enumerate.hpp"
#include "spincert/quadform.hpp"

namespace spincert {

namespace {

// Pairings of the candidate row r against previous rows (and itself) under x
// must all vanish for the row span to stay isotropic.
bool row_compatible(const IntMatrix& x, const IntMatrix& h, std::size_t rows,
                    const std::vector<Int>& r) {
  const std::size_t n = x.rows();
  Int self = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (r[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (r[b] != 0) self += r[a] * x.at(a, b) * r[b];
  }
  if (self != 0) return false;
  for (std::size_t i = 0; i < rows; ++i) {
    Int fwd = 0, bwd = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (h.at(i, a) != 0 && r[b] != 0) fwd += h.at(i, a) * x.at(a, b) * r[b];
        if (r[a] != 0 && h.at(i, b) != 0) bwd += r[a] * x.at(a, b) * h.at(i, b);
      }
    if (fwd != 0 || bwd != 0) return false;
  }
  return true;
}

bool is_primitive(const IntMatrix& rows, std::size_t n) {
  try {
    complete_rows_to_unimodular(rows, n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Extends h to det +-1 by choosing each completion row as the first vector
// (in balanced lexicographic order, smallest entry bound first) that keeps
// the row stack primitive; makes the full witness matrix reproducible.
IntMatrix complete_rows_canonical(const IntMatrix& h, std::size_t n) {
  IntMatrix stack = h;
  while (stack.rows() < n) {
    IntMatrix next(stack.rows() + 1, n);
    next.paste(0, 0, stack);
    bool placed = false;
    for (long bound = 1; bound <= 64 && !placed; ++bound) {
      const std::size_t digits = detail::balanced_digit_count(bound);
      std::vector<std::size_t> digit(n, 0);
      for (;;) {
        for (std::size_t j = 0; j < n; ++j)
          next.at(stack.rows(), j) = detail::balanced_digit(digit[j]);
        if (is_primitive(next, n)) {
          placed = true;
          break;
        }
        std::size_t j = n;
        while (j > 0 && ++digit[j - 1] == digits) digit[--j] = 0;
        if (j == 0) break;
      }
    }
    if (!placed)
      throw Error(errc::internal_error, "oracle: completion search failed");
    stack = std::move(next);
  }
  return stack;
}

std::optional<IntMatrix> try_complete(const IntMatrix& h, const IntMatrix& x) {
  const std::size_t n = x.rows();
  if (!is_primitive(h, n)) return std::nullopt;
  IntMatrix p = complete_rows_canonical(h, n);
  IntMatrix z = congruence(p, x);
  for (std::size_t i = 0; i < n / 2; ++i)
    for (std::size_t j = 0; j < n / 2; ++j)
      if (z.at(i, j) != 0) return std::nullopt;
  return p;
}

}  // namespace

std::optional<IntMatrix> search_null_cobordant(const IntMatrix& x,
                                               const SearchBudget& budget) {
  if (!x.is_square())
    throw Error(errc::dimension_mismatch, "oracle: matrix must be square");
  if (budget.max_size > 6)
    throw Error(errc::schema_error, "oracle budget max_size must be <= 6");
  if (x.rows() % 2 != 0)
    throw Error(errc::odd_size, "oracle: matrix size must be even");
  if (x.rows() > budget.max_size)
    throw Error(errc::size_exceeds_budget,
                "oracle: matrix exceeds the search budget");
  const std::size_t n = x.rows();
  const std::size_t h_rows = n / 2;
  if (n == 0) return IntMatrix();

  const std::size_t digits =
      detail::balanced_digit_count(budget.max_entry);
  IntMatrix h(h_rows, n);
  std::vector<Int> row(n);
  std::optional<IntMatrix> result;

  // Row-by-row balanced lexicographic enumeration with isotropy pruning.
  auto fill_row = [&](auto&& self, std::size_t r, std::size_t col) -> bool {
    if (col == n) {
      if (!row_compatible(x, h, r, row)) return false;
      for (std::size_t j = 0; j < n; ++j) h.at(r, j) = row[j];
      if (r + 1 < h_rows) {
        std::vector<Int> saved = std::move(row);
        row.assign(n, 0);
        bool found = self(self, r + 1, 0);
        row = std::move(saved);
        return found;
      }
      result = try_complete(h, x);
      return result.has_value();
    }
    for (std::size_t d = 0; d < digits; ++d) {
      row[col] = detail::balanced_digit(d);
      if (self(self, r, col + 1)) return true;
    }
    row[col] = 0;
    return false;
  };
  fill_row(fill_row, 0, 0);
  return result;
}

bool cross_validate(const SliceCertificate& cert, const SearchBudget& budget) {
  const std::size_t size = cert.target.rows() + cert.stabilizer.rows();
  if (size > budget.max_size)
    throw Error(errc::size_exceeds_budget,
                "oracle: certificate exceeds the search budget");
  if (!verify(cert)) return false;
  return search_null_cobordant(block_sum(cert.target, cert.stabilizer), budget)
      .has_value();
}

}  // namespace spincert
