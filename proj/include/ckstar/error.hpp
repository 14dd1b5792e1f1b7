#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ckstar {

/// Machine-readable failure categories. Every library error carries one.
enum class ErrorCode {
  parse_error,
  invalid_graph,
  invalid_path,
  composition_mismatch,
  length_mismatch,
  non_composable,
  unsupported_root_order,
  out_of_range,
  window_too_short,
  search_failure,
  loops_not_equalizable,
  precondition,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ckstar
