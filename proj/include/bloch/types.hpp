#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bloch {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Default half-width of the tolerance band used by the three-way verdicts.
inline constexpr double kDefaultTol = 1e-9;

/// Thrown when an input violates a documented precondition (dimension
/// mismatch, broken invariant, out-of-range index).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

inline int generator_count(int n) { return n * n - 1; }

}  // namespace bloch
