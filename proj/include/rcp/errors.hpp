#pragma once

#include <stdexcept>

namespace rcp {

/// Malformed textual input (graph files, restraint literals, JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (automorphism cap, enumeration cap, work budget)
/// would be exceeded.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcp
