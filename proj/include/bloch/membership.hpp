#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bloch/statemap.hpp"
#include "bloch/structure_constants.hpp"
#include "bloch/types.hpp"

namespace bloch {

/// Power sums C_q = sum_i x_i^q of the spectrum, realized as tr rho^q.
/// c[q-1] holds C_q; C_1 = 1 for unit-trace inputs.
struct MomentVector {
  int n = 0;
  std::vector<double> c;
};

/// Characteristic-polynomial coefficients of det(xI - rho) with alternating
/// signs stripped: a[0] = a_0 = 1 and a[k] = a_k, the elementary symmetric
/// polynomials of the spectrum. All a_k >= 0 iff the spectrum is nonnegative.
struct CoefficientVector {
  int n = 0;
  std::vector<double> a;

  /// Largest k for which a_k is present.
  int order() const { return static_cast<int>(a.size()) - 1; }
};

enum class Decision { Inside, Boundary, Outside };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Inside: return "INSIDE";
    case Decision::Boundary: return "BOUNDARY";
    case Decision::Outside: return "OUTSIDE";
  }
  return "?";
}

/// Three-way membership verdict with per-index margins. failing_index is
/// present exactly when the decision is Outside and names the smallest index
/// whose margin falls below -tol (1-based).
struct MembershipVerdict {
  Decision decision = Decision::Inside;
  std::vector<double> margins;
  std::optional<int> failing_index;

  double min_margin() const {
    return *std::min_element(margins.begin(), margins.end());
  }
};

namespace detail {

inline MembershipVerdict classify_margins(std::vector<double> margins, double tol) {
  MembershipVerdict verdict;
  verdict.margins = std::move(margins);
  for (std::size_t i = 0; i < verdict.margins.size(); ++i) {
    if (verdict.margins[i] < -tol) {
      verdict.decision = Decision::Outside;
      verdict.failing_index = static_cast<int>(i) + 1;
      return verdict;
    }
  }
  verdict.decision =
      verdict.min_margin() > tol ? Decision::Inside : Decision::Boundary;
  return verdict;
}

}  // namespace detail

/// C_q = tr rho^q for q = 1..qmax by repeated matrix multiplication. Kept
/// deliberately free of eigendecompositions so the eigenvalue oracle stays an
/// independent check.
inline MomentVector moments_trace(const DensityCandidate& rho, int qmax) {
  if (qmax < 1) throw DomainError("moments_trace: qmax must be >= 1");
  MomentVector m;
  m.n = rho.n;
  m.c.reserve(qmax);
  CMatrix power = rho.matrix;
  m.c.push_back(power.trace().real());
  for (int q = 2; q <= qmax; ++q) {
    power = power * rho.matrix;
    m.c.push_back(power.trace().real());
  }
  return m;
}

/// Closed-form C_q (q = 2, 3, 4) as a polynomial in |v|^2 and the symmetric
/// contractions g_ijk v_i v_j v_k and g_ijm g_mkl v_i v_j v_k v_l:
///   C_2 = (4N + 2N^2 |v|^2) / (2N)^2
///   C_3 = (8N + 12N^2 |v|^2 + 2N^3 G3) / (2N)^3
///   C_4 = (16N + 48N^2 |v|^2 + 16N^3 G3 + 4N^3 |v|^4 + 2N^4 G4) / (2N)^4
/// The f-contractions vanish by antisymmetry and are never evaluated.
inline double moments_closed_form(const BlochVector& v, const StructureConstants& sc, int q) {
  validate_bloch_vector(v);
  if (sc.n != v.n) throw DomainError("moments_closed_form: vector and constants level counts differ");
  const double N = v.n;
  const double len2 = v.components.squaredNorm();
  switch (q) {
    case 2:
      return (4.0 * N + 2.0 * N * N * len2) / std::pow(2.0 * N, 2);
    case 3: {
      const double g3 = g_cubic_form(sc, v.components);
      return (8.0 * N + 12.0 * N * N * len2 + 2.0 * N * N * N * g3) / std::pow(2.0 * N, 3);
    }
    case 4: {
      const RVector w = g_pair_contraction(sc, v.components);
      const double g3 = w.dot(v.components);
      const double g4 = w.squaredNorm();
      return (16.0 * N + 48.0 * N * N * len2 + 16.0 * N * N * N * g3 +
              4.0 * N * N * N * len2 * len2 + 2.0 * N * N * N * N * g4) /
             std::pow(2.0 * N, 4);
    }
    default:
      throw DomainError("moments_closed_form: q must be 2, 3 or 4");
  }
}

/// Newton's recursion  k a_k = sum_{q=1..k} (-1)^{q-1} C_q a_{k-q}  with
/// a_0 = 1, producing a_1..a_N from the power sums C_1..C_N.
inline CoefficientVector char_coefficients_newton(const MomentVector& moments) {
  const int order = moments.n;
  if (static_cast<int>(moments.c.size()) < order)
    throw DomainError("char_coefficients_newton: need moments up to q = " + std::to_string(order));
  CoefficientVector coeff;
  coeff.n = moments.n;
  coeff.a.assign(order + 1, 0.0);
  coeff.a[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    double sum = 0.0;
    double sign = 1.0;
    for (int q = 1; q <= k; ++q) {
      sum += sign * moments.c[q - 1] * coeff.a[k - q];
      sign = -sign;
    }
    coeff.a[k] = sum / k;
  }
  return coeff;
}

/// Closed-form a_1..a_min(N,4) in structure-constant contractions:
///   1! a_1 = 1
///   2! a_2 = (N-1)/N - |v|^2 / 2
///   3! a_3 = (N-1)(N-2)/N^2 - 3(N-2)/(2N) |v|^2 + G3/2
///   4! a_4 = (N-1)(N-2)(N-3)/N^3 - 3(N-2)(N-3)/N^2 |v|^2
///            + 3(N-2)/(4N) |v|^4 + 2(N-3)/N G3 - (3/4) G4
/// with G3 = g_ijk v_i v_j v_k and G4 = g_ijm g_mkl v_i v_j v_k v_l. These
/// follow from substituting the closed-form moments into Newton's recursion.
inline CoefficientVector char_coefficients_closed_form(const BlochVector& v,
                                                       const StructureConstants& sc) {
  validate_bloch_vector(v);
  if (sc.n != v.n)
    throw DomainError("char_coefficients_closed_form: vector and constants level counts differ");
  const double N = v.n;
  const double len2 = v.components.squaredNorm();
  const int order = std::min(v.n, 4);

  CoefficientVector coeff;
  coeff.n = v.n;
  coeff.a.assign(order + 1, 0.0);
  coeff.a[0] = 1.0;
  coeff.a[1] = 1.0;
  coeff.a[2] = ((N - 1.0) / N - 0.5 * len2) / 2.0;
  if (order >= 3) {
    const RVector w = g_pair_contraction(sc, v.components);
    const double g3 = w.dot(v.components);
    coeff.a[3] = ((N - 1.0) * (N - 2.0) / (N * N) - 3.0 * (N - 2.0) / (2.0 * N) * len2 +
                  0.5 * g3) /
                 6.0;
    if (order >= 4) {
      const double g4 = w.squaredNorm();
      coeff.a[4] = ((N - 1.0) * (N - 2.0) * (N - 3.0) / (N * N * N) -
                    3.0 * (N - 2.0) * (N - 3.0) / (N * N) * len2 +
                    3.0 * (N - 2.0) / (4.0 * N) * len2 * len2 + 2.0 * (N - 3.0) / N * g3 -
                    0.75 * g4) /
                   24.0;
    }
  }
  return coeff;
}

/// All-real-roots positivity test: true iff a_i >= -tol for every i = 1..N.
/// The all-real-roots premise is supplied by Hermiticity of the source
/// matrix, not verified here.
inline bool positivity_from_coefficients(const CoefficientVector& coeff, double tol) {
  for (std::size_t i = 1; i < coeff.a.size(); ++i)
    if (coeff.a[i] < -tol) return false;
  return true;
}

/// Membership test for the Bloch-vector space: maps v to its matrix, runs
/// the trace-power / Newton coefficient path and classifies against the
/// +-tol band. Margins are a_1..a_N.
inline MembershipVerdict is_bloch_vector(const BlochVector& v, const GeneratorBasis& basis,
                                         double tol = kDefaultTol) {
  const DensityCandidate rho = bloch_to_matrix(v, basis);
  const CoefficientVector coeff = char_coefficients_newton(moments_trace(rho, rho.n));
  return detail::classify_margins(
      std::vector<double>(coeff.a.begin() + 1, coeff.a.end()), tol);
}

/// Independent check of spectrum nonnegativity by Hermitian
/// eigendecomposition. Margins are the eigenvalues in ascending order.
inline MembershipVerdict eigenvalue_oracle(const DensityCandidate& rho,
                                           double tol = kDefaultTol) {
  validate_density_candidate(rho, 1e-9);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw DomainError("eigenvalue_oracle: eigendecomposition failed");
  const RVector eigs = solver.eigenvalues();
  return detail::classify_margins(std::vector<double>(eigs.data(), eigs.data() + eigs.size()),
                                  tol);
}

}  // namespace bloch
