#pragma once

#include <stdexcept>
#include <string>

namespace ekr {

enum class ErrorKind {
  invalid_argument,  // malformed or out-of-contract input
  guard_exceeded,    // a desk-scale size guard or combinatorial budget was hit
  not_a_subgroup,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ekr
