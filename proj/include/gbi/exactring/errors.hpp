#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbi {

// Operands disagree on variable count, parameter list or index range.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A division that was required to be exact left a remainder.
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gbi
