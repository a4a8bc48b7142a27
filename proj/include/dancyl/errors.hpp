#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dancyl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class UnknownVariableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at column " + std::to_string(position + 1)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The requested surface has a singular point (e.g. a multiple root in x^n z = P(y)).
class SingularInputError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Raw transition data violates g_ik = g_ij + g_jk.
class CocycleError : public Error {
 public:
  using Error::Error;
};

class NotComparableError : public Error {
 public:
  using Error::Error;
};

/// The fibration is a line bundle, so cancellation holds and no counterexample exists.
class LineBundleError : public Error {
 public:
  using Error::Error;
};

/// Raised when a self-certifying construction fails its own check. Always a bug.
class CertificateError : public Error {
 public:
  using Error::Error;
};

class NoSplittingFound : public Error {
 public:
  explicit NoSplittingFound(std::vector<int> attempted)
      : Error(describe(attempted)), attempted_(std::move(attempted)) {}
  const std::vector<int>& attempted_bounds() const { return attempted_; }

 private:
  static std::string describe(const std::vector<int>& bounds) {
    std::string s = "no splitting found at degree bounds {";
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(bounds[i]);
    }
    return s + "} (this does not certify non-existence)";
  }
  std::vector<int> attempted_;
};

}  // namespace dancyl
