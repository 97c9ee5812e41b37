#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lctinf {

// Bad user input: grammar, dimensions, precondition violations on caller data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position, int component = -1)
      : InputError(format(what, position, component)),
        position_(position),
        component_(component) {}

  std::size_t position() const { return position_; }
  int component() const { return component_; }

 private:
  static std::string format(const std::string& what, std::size_t pos, int comp) {
    std::string s;
    if (comp >= 0) s += "component " + std::to_string(comp) + ": ";
    return s + what + " at position " + std::to_string(pos);
  }

  std::size_t position_;
  int component_;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

// Two independent computations of the same exact quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lctinf
