#pragma once

// Test-side oracles, kept independent of the library paths they check.

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "bloch/sampling.hpp"
#include "bloch/statemap.hpp"
#include "bloch/types.hpp"

namespace testutil {

/// Elementary symmetric polynomials e_0..e_n of the given roots, built by
/// incremental polynomial expansion (Vieta route).
inline std::vector<double> elementary_symmetric(const std::vector<double>& roots) {
  std::vector<double> e{1.0};
  e.resize(roots.size() + 1, 0.0);
  std::size_t used = 0;
  for (double r : roots) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += r * e[k - 1];
  }
  return e;
}

/// Power sums C_q = sum_i r_i^q for q = 1..qmax.
inline std::vector<double> power_sums(const std::vector<double>& roots, int qmax) {
  std::vector<double> c(qmax, 0.0);
  for (double r : roots) {
    double p = 1.0;
    for (int q = 1; q <= qmax; ++q) {
      p *= r;
      c[q - 1] += p;
    }
  }
  return c;
}

/// Random real orthogonal matrix from the QR factorization of a Gaussian.
inline bloch::RMatrix random_orthogonal(int dim, bloch::Sampler& rng) {
  bloch::RMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = rng.normal();
  Eigen::HouseholderQR<bloch::RMatrix> qr(m);
  bloch::RMatrix q = qr.householderQ();
  const bloch::RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c)
    if (r(c, c) < 0.0) q.col(c) = -q.col(c);
  return q;
}

/// Dense expansion of a sparse totally antisymmetric tensor entry list into
/// the transformed tensor t'_ijk = V_il V_jm V_kn t_lmn.
inline std::vector<double> transform_rank3(
    const std::vector<std::pair<std::array<int, 3>, double>>& full_entries,
    const bloch::RMatrix& v) {
  const int d = static_cast<int>(v.rows());
  std::vector<double> out(static_cast<std::size_t>(d) * d * d, 0.0);
  for (const auto& [key, value] : full_entries) {
    const int l = key[0] - 1, m = key[1] - 1, n = key[2] - 1;
    for (int i = 0; i < d; ++i) {
      const double vil = v(i, l);
      if (vil == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        const double vjm = v(j, m);
        if (vjm == 0.0) continue;
        for (int k = 0; k < d; ++k)
          out[(static_cast<std::size_t>(i) * d + j) * d + k] += vil * vjm * v(k, n) * value;
      }
    }
  }
  return out;
}

/// Kronecker product, the composite-state builder.
inline bloch::CMatrix kron(const bloch::CMatrix& a, const bloch::CMatrix& b) {
  bloch::CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

inline bloch::DensityCandidate bell_phi_plus() {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi[0] = 1.0 / std::sqrt(2.0);
  psi[3] = 1.0 / std::sqrt(2.0);
  return bloch::DensityCandidate{4, psi * psi.adjoint()};
}

/// p |Phi+><Phi+| + (1-p) I/4.
inline bloch::DensityCandidate werner(double p) {
  return bloch::DensityCandidate{
      4, p * bell_phi_plus().matrix + (1.0 - p) * 0.25 * bloch::CMatrix::Identity(4, 4)};
}

}  // namespace testutil
