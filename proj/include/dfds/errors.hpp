#pragma once

#include <stdexcept>

namespace dfds {

/// Thrown for malformed or out-of-range caller input.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A search or hill climb hit its node or iteration cap before reaching a
/// verdict. Never to be read as "no solution".
class InconclusiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace dfds
