#pragma once

#include <stdexcept>
#include <string>

namespace colormosaic {

// Bad arguments or configuration: wrong color model, alpha <= 0, invalid
// sweep range, unsupported model pair.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Array dimensions that do not fit the requested operation.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, undecodable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace colormosaic
