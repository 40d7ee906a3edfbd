#pragma once

#include <cmath>
#include <string>

#include "bloch/generators.hpp"
#include "bloch/types.hpp"

namespace bloch {

/// Real vector of generator expectation values <M_i> in R^{N^2-1}.
/// When produced from a candidate with spectrum in [0,1] each component is
/// bounded by sqrt(2) in magnitude; the stored contract is the looser [-2,2].
struct BlochVector {
  int n = 0;
  RVector components;

  int dim() const { return static_cast<int>(components.size()); }
};

/// Unit-trace Hermitian N x N matrix. Positivity is deliberately NOT an
/// invariant here: it is the question the membership tests answer.
struct DensityCandidate {
  int n = 0;
  CMatrix matrix;
};

/// Observable o = a I + b_i M_i given by offset and direction.
struct Observable {
  int n = 0;
  double offset = 0.0;
  RVector direction;
};

inline void validate_bloch_vector(const BlochVector& v) {
  if (v.n < 2) throw DomainError("bloch vector: level count must be >= 2");
  if (v.dim() != generator_count(v.n))
    throw DomainError("bloch vector: expected " + std::to_string(generator_count(v.n)) +
                      " components, got " + std::to_string(v.dim()));
}

/// Checks conditions (i) unit trace and (ii) Hermiticity, both within tol.
inline void validate_density_candidate(const DensityCandidate& rho, double tol = 1e-12) {
  if (rho.n < 2) throw DomainError("density candidate: level count must be >= 2");
  if (rho.matrix.rows() != rho.n || rho.matrix.cols() != rho.n)
    throw DomainError("density candidate: matrix shape does not match level count");
  if (std::abs(rho.matrix.trace() - cplx(1.0, 0.0)) > tol)
    throw DomainError("density candidate: trace differs from 1 beyond tolerance");
  if ((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw DomainError("density candidate: matrix is not Hermitian within tolerance");
}

/// rho = I/N + (1/2) sum_i v_i M_i. Unit-trace Hermitian by construction,
/// whether or not v is a member of the Bloch-vector space.
inline DensityCandidate bloch_to_matrix(const BlochVector& v, const GeneratorBasis& basis) {
  validate_bloch_vector(v);
  if (v.n != basis.n) throw DomainError("bloch_to_matrix: vector and basis level counts differ");
  CMatrix m = CMatrix::Identity(v.n, v.n) / static_cast<double>(v.n);
  for (int i = 0; i < v.dim(); ++i) {
    const double c = v.components[i];
    if (c != 0.0) m += (0.5 * c) * basis.matrices[i];
  }
  return DensityCandidate{v.n, std::move(m)};
}

/// v_i = tr(rho M_i). The trace is mathematically real; an imaginary residue
/// above 1e-12 indicates a corrupted input and is rejected rather than
/// silently truncated.
inline BlochVector matrix_to_bloch(const DensityCandidate& rho, const GeneratorBasis& basis) {
  validate_density_candidate(rho);
  if (rho.n != basis.n) throw DomainError("matrix_to_bloch: matrix and basis level counts differ");
  const int d = basis.dim();
  RVector components(d);
  for (int i = 0; i < d; ++i) {
    const cplx t = (rho.matrix * basis.matrices[i]).trace();
    if (std::abs(t.imag()) > 1e-12)
      throw DomainError("matrix_to_bloch: tr(rho M_" + std::to_string(i + 1) +
                        ") has imaginary residue beyond tolerance");
    components[i] = t.real();
  }
  return BlochVector{rho.n, std::move(components)};
}

/// tr rho^2 of the mapped matrix: 1/N + |v|^2 / 2.
inline double purity(const BlochVector& v) {
  validate_bloch_vector(v);
  return 1.0 / v.n + 0.5 * v.components.squaredNorm();
}

/// Radius sqrt(2(N-1)/N) of the ball enclosing the Bloch-vector space.
/// Equals 1 for N=2 (the Bloch ball) and grows monotonically toward sqrt(2).
inline double ball_radius(int n) {
  if (n < 2) throw DomainError("ball_radius: level count must be >= 2");
  return std::sqrt(2.0 * (n - 1) / n);
}

/// Expectation value of o = a I + b_i M_i in the state v: a + b . v.
inline double expectation(const BlochVector& v, const Observable& o) {
  validate_bloch_vector(v);
  if (o.n != v.n || o.direction.size() != v.dim())
    throw DomainError("expectation: observable dimensions do not match state");
  return o.offset + o.direction.dot(v.components);
}

/// tr(rho_1 rho_2) = 1/N + (v1 . v2) / 2.
inline double overlap(const BlochVector& v1, const BlochVector& v2) {
  validate_bloch_vector(v1);
  validate_bloch_vector(v2);
  if (v1.n != v2.n) throw DomainError("overlap: level counts differ");
  return 1.0 / v1.n + 0.5 * v1.components.dot(v2.components);
}

}  // namespace bloch
