#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace alglin {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Error hierarchy. Every failure the library reports derives from Error so
// callers (the CLI in particular) can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or dimensions that do not fit together.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated (degree too low, duplicate nodes...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// zD - A is numerically singular at the requested point.
class SpectrumProximityError : public Error {
 public:
  SpectrumProximityError(const std::string& what, Complex z) : Error(what), point_(z) {}
  Complex point() const noexcept { return point_; }

 private:
  Complex point_;
};

// Sampling could not find enough admissible points.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// No admissible shift exists: the pencil looks singular.
class SingularPencilError : public Error {
 public:
  using Error::Error;
};

// A construction failed its post-hoc oracle check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Must not happen; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace alglin
