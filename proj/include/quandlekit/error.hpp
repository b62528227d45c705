#ifndef QUANDLEKIT_ERROR_HPP_
#define QUANDLEKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quandlekit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input too large for the configured desk-scale limits.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& what, std::size_t limit)
      : Error(what + " exceeds cap " + std::to_string(limit)), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidTable : public Error {
 public:
  using Error::Error;
};

// Quandle axiom failures carry the witness that broke them.

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class Axiom1Violation : public AxiomViolation {
 public:
  explicit Axiom1Violation(int x)
      : AxiomViolation("axiom 1 (x*x = x) fails at x = " + std::to_string(x)),
        x(x) {}
  int x;
};

class Axiom2Violation : public AxiomViolation {
 public:
  explicit Axiom2Violation(int y)
      : AxiomViolation("axiom 2 (right translation is a bijection) fails at y = "
                       + std::to_string(y)),
        y(y) {}
  int y;
};

class Axiom3Violation : public AxiomViolation {
 public:
  Axiom3Violation(int x, int y, int z)
      : AxiomViolation("axiom 3 ((x*y)*z = (x*z)*(y*z)) fails at (x,y,z) = ("
                       + std::to_string(x) + "," + std::to_string(y) + ","
                       + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  int x, y, z;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class CosetLimitExceeded : public Error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : Error("coset enumeration exceeded " + std::to_string(limit)
              + " live cosets (this does not imply infinite index)"),
        limit(limit) {}
  std::size_t limit;
};

class DiagonalViolation : public Error {
 public:
  explicit DiagonalViolation(int x)
      : Error("cocycle is not the identity on the diagonal at x = "
              + std::to_string(x)),
        x(x) {}
  int x;
};

class CocycleViolation : public Error {
 public:
  CocycleViolation(int x, int y, int z)
      : Error("cocycle condition fails at (x,y,z) = (" + std::to_string(x) + ","
              + std::to_string(y) + "," + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  int x, y, z;
};

class NotInStabilizer : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  using Error::Error;
};

class FixedPointHypothesisViolated : public Error {
 public:
  explicit FixedPointHypothesisViolated(int x)
      : Error("assigned automorphism does not fix its own element at x = "
              + std::to_string(x)),
        x(x) {}
  int x;
};

class SigmaNotHom : public Error {
 public:
  using Error::Error;
};

class TauNotHom : public Error {
 public:
  using Error::Error;
};

class UnionConditionViolated : public Error {
 public:
  UnionConditionViolated(int which, int x, int y, int z)
      : Error("union condition (" + std::to_string(which) + ") fails at (x,y,z) = ("
              + std::to_string(x) + "," + std::to_string(y) + ","
              + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  int x, y, z;
};

class Condition1Violated : public UnionConditionViolated {
 public:
  Condition1Violated(int x, int y, int z) : UnionConditionViolated(1, x, y, z) {}
};

class Condition2Violated : public UnionConditionViolated {
 public:
  Condition2Violated(int x, int y, int z) : UnionConditionViolated(2, x, y, z) {}
};

class NotInvolutory : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace quandlekit

#endif  // QUANDLEKIT_ERROR_HPP_
