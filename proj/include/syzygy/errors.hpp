#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

/// Invalid mathematical input: bad index range, odd pairing order, wrong basis.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The symbol exists but has no defined value for these arguments
/// (e.g. epsilon with fewer distinct indices than the space dimension).
class undefined_symbol_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Request exceeds a configured enumeration cap; the message names the cap.
class resource_limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A pipeline produced a structurally impossible result (internal bug signal).
class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace syzygy
