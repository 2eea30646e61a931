#include "sbt/error.hpp"

namespace sbt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::invalid_permutation: return "invalid permutation";
  case Errc::invalid_transposition: return "invalid transposition";
  case Errc::invalid_instance: return "invalid 3DT-instance";
  case Errc::not_well_ordered: return "triple is not well-ordered";
  case Errc::span_mismatch: return "span mismatch";
  case Errc::depth_exceeded: return "depth exceeded";
  case Errc::span_too_large: return "span too large";
  case Errc::arity_mismatch: return "arity mismatch";
  case Errc::unmatched_variable: return "unmatched variable";
  case Errc::invalid_variable: return "invalid variable";
  case Errc::undefined_decomposition: return "undefined block decomposition";
  case Errc::empty_formula: return "empty formula";
  case Errc::not_normalized: return "formula is not normalized";
  case Errc::unsatisfying_assignment: return "assignment does not satisfy the formula";
  case Errc::incomplete_trace: return "incomplete trace";
  case Errc::non_basic_block: return "non-basic block kind";
  case Errc::parse_error: return "parse error";
  case Errc::io_error: return "i/o error";
  case Errc::budget_exhausted: return "search budget exhausted";
  }
  return "unknown error";
}

} // namespace sbt
