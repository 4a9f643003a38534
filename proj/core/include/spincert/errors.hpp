#pragma once

#include <stdexcept>
#include <string>

namespace spincert {

enum class errc {
  dimension_mismatch,
  not_skew,
  not_symmetric,
  not_unimodular,
  odd_rank,
  precondition_failed,
  search_budget_exceeded,
  wrong_parity,
  shape_mismatch,
  not_unimodular_result,
  k_even,
  layout_mismatch,
  middle_block_nonempty,
  nonzero_signature,
  odd_size,
  size_exceeds_budget,
  syntax_error,
  schema_error,
  internal_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace spincert
