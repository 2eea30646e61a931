#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbt {

enum class Errc {
  invalid_permutation,
  invalid_transposition,
  invalid_instance,
  not_well_ordered,
  span_mismatch,
  depth_exceeded,
  span_too_large,
  arity_mismatch,
  unmatched_variable,
  invalid_variable,
  undefined_decomposition,
  empty_formula,
  not_normalized,
  unsatisfying_assignment,
  incomplete_trace,
  non_basic_block,
  parse_error,
  io_error,
  budget_exhausted,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace sbt
