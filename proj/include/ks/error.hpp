#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Caller supplied something outside an operation's domain (bad parameters,
// mismatched orders, malformed spec strings). Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series operation hit a zero leading coefficient it needed to divide by.
class SingularSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ks
