#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace seqdig {

enum class errc {
  duplicate_vertex,
  unknown_endpoint,
  loop_arc,
  unknown_vertex,
  syntax_error,
  empty_sequence,
  pattern_too_large,
  not_in_class,
  derivation_ambiguous,
  out_of_range,
  state_space_too_large,
  too_large,
  empty_input,
  not_a_path,
  order_infeasible,
  invalid_decomposition,
  invalid_spec,
  precondition_violated,
  unknown_vertex_in_bag,
  cross_check_failed,
  io_error,
};

/// Library-wide exception; every throwing operation tags one errc.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace seqdig
