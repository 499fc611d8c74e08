#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bookemb {

/// Malformed instance, violated precondition or inconsistent witness.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver refused to run because the instance exceeds a configured limit.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, double limit, double requested)
      : std::runtime_error(what), limit_(limit), requested_(requested) {}

  double limit() const { return limit_; }
  double requested() const { return requested_; }

 private:
  double limit_;
  double requested_;
};

}  // namespace bookemb
