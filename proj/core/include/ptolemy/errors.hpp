#pragma once

#include <stdexcept>
#include <string>

namespace ptolemy {

/// Malformed or inconsistent user input (bad files, unknown ids, bad flags).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition does not hold.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric input is degenerate for the requested construction
/// (coincident circles, repeated points, ...).
class degenerate_error : public std::runtime_error {
 public:
  explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

/// A limit schedule ended before the Cauchy criterion certified convergence.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptolemy
