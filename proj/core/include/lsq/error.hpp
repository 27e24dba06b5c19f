#pragma once

#include <stdexcept>
#include <string>

namespace lsq {

// Error categories used across the library. Codes carry up to two integer
// arguments (row/column/symbol indices, 1-based) for the first violation
// found in row-major order.
enum class errc {
  duplicate_in_row,
  duplicate_in_column,
  out_of_range,
  parse_error,
  size_mismatch,
  dimension_mismatch,
  equal_rows,
  order_too_small,
  order_too_large,
  order_mismatch,
  already_labelled,
  singular_symbol,
  invalid_cell,
  pair_uncovered,
  pair_doubled,
  bad_order,
  not_idempotent,
  not_totally_symmetric,
  not_steiner,
  not_unipotent,
  not_symmetric,
  not_one_factorisation,
  no_unlabelled_cycle,
  invalid_argument,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, int arg0 = 0, int arg1 = 0)
      : std::runtime_error(what), code_(code), arg0_(arg0), arg1_(arg1) {}

  errc code() const { return code_; }
  int arg0() const { return arg0_; }
  int arg1() const { return arg1_; }

 private:
  errc code_;
  int arg0_;
  int arg1_;
};

}  // namespace lsq
