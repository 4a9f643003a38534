#include "spincert/seifert.hpp"

namespace spincert {

SeifertData validate_seifert(const IntMatrix& a, int n) {
  if (!a.is_square())
    throw Error(errc::dimension_mismatch, "Seifert matrix must be square");
  if (n < 1) throw Error(errc::schema_error, "n must be >= 1");
  const int epsilon = (n % 2 == 0) ? 1 : -1;
  IntMatrix sym = epsilon == 1 ? a + transpose(a) : a - transpose(a);
  if (!is_unimodular(sym))
    throw Error(errc::not_unimodular,
                "A + (-1)^n A' has determinant other than +-1");
  return SeifertData{a, n, epsilon};
}

IntMatrix epsilon_symmetrization(const SeifertData& s) {
  return s.epsilon == 1 ? s.a + transpose(s.a) : s.a - transpose(s.a);
}

int levine_signature_residue(const SeifertData& s) {
  if (s.epsilon != 1)
    throw Error(errc::wrong_parity,
                "signature residue is defined only for even n");
  int sig = signature(epsilon_symmetrization(s));
  return ((sig % 16) + 16) % 16;
}

SliceDispatch even_dimensional_slice(int k) {
  // The knot is S^{k-2} in S^k; even k means an even-dimensional knot.
  return k % 2 == 0 ? SliceDispatch::slice_by_kervaire
                    : SliceDispatch::needs_matrix;
}

std::string slice_dispatch_message(SliceDispatch d) {
  return d == SliceDispatch::slice_by_kervaire ? "slice by Kervaire"
                                               : "use matrix machinery";
}

}  // namespace spincert
