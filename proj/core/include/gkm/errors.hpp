#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Malformed input: parse failures, dangling names, rank mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition or assertion.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkm
