#pragma once

#include <stdexcept>
#include <string>

namespace qf {

enum class ErrorCode {
  invalid_argument,
  degree_mismatch,
  cap_exceeded,
  not_subgroup,
  not_normal,
  not_transitive,
  invalid_square,
  empty_model_space,
  parse_error,
  numeric,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qf
