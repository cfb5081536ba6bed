#ifndef NBHO_ERRORS_HPP
#define NBHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nbho {

// Invalid physical input (bad masses, couplings, dimensions, malformed files).
// CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A computation that ran on valid input but whose physics contract failed
// (unbound spectrum, oracle mismatch). CLI maps these to exit code 1.
class PhysicsError : public std::runtime_error {
 public:
  PhysicsError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class UnstableSystemError : public PhysicsError {
 public:
  UnstableSystemError(int mode_index, double d_value)
      : PhysicsError("UnstableSystem",
                     "mode " + std::to_string(mode_index) +
                         " has non-positive stiffness eigenvalue d = " +
                         std::to_string(d_value)),
        mode_index_(mode_index),
        d_value_(d_value) {}
  int mode_index() const { return mode_index_; }
  double d_value() const { return d_value_; }

 private:
  int mode_index_;
  double d_value_;
};

class MismatchError : public PhysicsError {
 public:
  explicit MismatchError(double max_relative_deviation)
      : PhysicsError("Mismatch",
                     "spectra disagree, max relative deviation = " +
                         std::to_string(max_relative_deviation)),
        deviation_(max_relative_deviation) {}
  double max_relative_deviation() const { return deviation_; }

 private:
  double deviation_;
};

class WrongZeroModeCountError : public PhysicsError {
 public:
  explicit WrongZeroModeCountError(int count)
      : PhysicsError("WrongZeroModeCount",
                     "expected exactly 1 zero mode, found " +
                         std::to_string(count)),
        count_(count) {}
  int count() const { return count_; }

 private:
  int count_;
};

}  // namespace nbho

#endif
