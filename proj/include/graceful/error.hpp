#pragma once

#include <stdexcept>
#include <string>

namespace graceful {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TreeError : public Error {
 public:
  enum class Kind { malformed, out_of_range, self_loop, duplicate_edge, edge_count, disconnected, too_large };

  TreeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class LabelingError : public Error {
 public:
  using Error::Error;
};

class ConstraintError : public Error {
 public:
  using Error::Error;
};

}  // namespace graceful
