#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "bloch/types.hpp"

namespace bloch {

/// Ordered orthogonal generator set of SU(N): N^2-1 traceless Hermitian
/// matrices with tr(M_i M_j) = 2 delta_ij.
///
/// Canonical order: for k = 2..N emit u_{jk}, v_{jk} for j = 1..k-1, then
/// w_{k-1}. This reproduces the Pauli matrices for N=2 and the Gell-Mann
/// matrices for N=3, and is the wire-format order of the CLI dumps.
struct GeneratorBasis {
  int n = 0;
  std::vector<CMatrix> matrices;

  int dim() const { return static_cast<int>(matrices.size()); }
};

/// Real orthogonal change of basis acting on generator indices.
struct OrthogonalMatrix {
  int dim = 0;
  RMatrix entries;
};

namespace detail {

inline bool nearly_hermitian(const CMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace detail

/// Checks the three defining invariants: Hermiticity (1e-14 entrywise),
/// tracelessness (1e-14), and tr(M_i M_j) = 2 delta_ij (1e-12).
/// Throws DomainError naming the first violation.
inline void validate_generator_basis(const GeneratorBasis& basis,
                                     double herm_tol = 1e-14,
                                     double trace_tol = 1e-14,
                                     double ortho_tol = 1e-12) {
  if (basis.n < 2) throw DomainError("generator basis: level count must be >= 2");
  const int d = generator_count(basis.n);
  if (basis.dim() != d)
    throw DomainError("generator basis: expected " + std::to_string(d) +
                      " matrices, got " + std::to_string(basis.dim()));
  for (int i = 0; i < d; ++i) {
    const CMatrix& m = basis.matrices[i];
    if (m.rows() != basis.n || m.cols() != basis.n)
      throw DomainError("generator basis: matrix " + std::to_string(i + 1) + " has wrong shape");
    if (!detail::nearly_hermitian(m, herm_tol))
      throw DomainError("generator basis: matrix " + std::to_string(i + 1) + " is not Hermitian");
    if (std::abs(m.trace()) > trace_tol)
      throw DomainError("generator basis: matrix " + std::to_string(i + 1) + " is not traceless");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      const cplx t = (basis.matrices[i] * basis.matrices[j]).trace();
      const double expected = (i == j) ? 2.0 : 0.0;
      if (std::abs(t - expected) > ortho_tol)
        throw DomainError("generator basis: tr(M_" + std::to_string(i + 1) + " M_" +
                          std::to_string(j + 1) + ") != 2 delta_ij");
    }
  }
}

/// Builds the canonical generator basis of SU(N):
///   u_{jk} = |j><k| + |k><j|
///   v_{jk} = -i(|j><k| - |k><j|)
///   w_l    = sqrt(2/(l(l+1))) (sum_{j<=l} |j><j| - l |l+1><l+1|)
/// in the order u_{jk}, v_{jk} (j = 1..k-1), w_{k-1} for each k = 2..N.
inline GeneratorBasis build_generator_basis(int n) {
  if (n < 2) throw DomainError("build_generator_basis: level count must be >= 2");
  GeneratorBasis basis;
  basis.n = n;
  basis.matrices.reserve(generator_count(n));
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      CMatrix u = CMatrix::Zero(n, n);
      u(j - 1, k - 1) = 1.0;
      u(k - 1, j - 1) = 1.0;
      basis.matrices.push_back(std::move(u));

      CMatrix v = CMatrix::Zero(n, n);
      v(j - 1, k - 1) = cplx(0.0, -1.0);
      v(k - 1, j - 1) = cplx(0.0, 1.0);
      basis.matrices.push_back(std::move(v));
    }
    const int l = k - 1;
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    CMatrix w = CMatrix::Zero(n, n);
    for (int j = 1; j <= l; ++j) w(j - 1, j - 1) = norm;
    w(l, l) = -l * norm;
    basis.matrices.push_back(std::move(w));
  }
  return basis;
}

/// Applies the index rotation M'_i = sum_j V_ij M_j. The result is again an
/// orthogonal generator basis for any V in O(N^2-1).
inline GeneratorBasis rotate_basis(const GeneratorBasis& basis, const OrthogonalMatrix& v,
                                   double ortho_tol = 1e-12) {
  const int d = generator_count(basis.n);
  if (v.dim != d || v.entries.rows() != d || v.entries.cols() != d)
    throw DomainError("rotate_basis: orthogonal matrix dimension must equal N^2-1");
  const RMatrix gram = v.entries.transpose() * v.entries;
  if ((gram - RMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > ortho_tol)
    throw DomainError("rotate_basis: matrix is not orthogonal within tolerance");

  GeneratorBasis rotated;
  rotated.n = basis.n;
  rotated.matrices.reserve(d);
  for (int i = 0; i < d; ++i) {
    CMatrix m = CMatrix::Zero(basis.n, basis.n);
    for (int j = 0; j < d; ++j) {
      const double vij = v.entries(i, j);
      if (vij != 0.0) m += vij * basis.matrices[j];
    }
    rotated.matrices.push_back(std::move(m));
  }
  return rotated;
}

}  // namespace bloch
