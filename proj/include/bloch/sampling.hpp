#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bloch/statemap.hpp"
#include "bloch/types.hpp"

namespace bloch {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard and the mappings below avoid the implementation-defined library
/// distributions, so identical seeds give identical streams everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTau * u2);
    have_spare_ = true;
    return r * std::cos(kTau * u2);
  }

  /// Standard complex normal (independent real and imaginary parts).
  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  static constexpr double kTau = 6.2831853071795864769;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

enum class SampleKind { Pure, Mixed, BallUniform };

inline SampleKind sample_kind_from_string(const std::string& s) {
  if (s == "pure") return SampleKind::Pure;
  if (s == "mixed") return SampleKind::Mixed;
  if (s == "ball-uniform") return SampleKind::BallUniform;
  throw DomainError("unknown sample kind '" + s + "' (expected pure, mixed or ball-uniform)");
}

/// Random pure state |psi><psi| from a normalized vector of independent
/// standard complex Gaussians.
inline DensityCandidate sample_pure_state(int n, Sampler& rng) {
  Eigen::VectorXcd psi(n);
  for (int i = 0; i < n; ++i) psi[i] = rng.complex_normal();
  psi.normalize();
  return DensityCandidate{n, psi * psi.adjoint()};
}

/// Random mixed state G G^dagger / tr(G G^dagger) with G an N x N complex
/// Gaussian matrix (Hilbert-Schmidt measure).
inline DensityCandidate sample_mixed_state(int n, Sampler& rng) {
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityCandidate{n, std::move(rho)};
}

/// Uniform point in the enclosing ball of radius sqrt(2(N-1)/N) in
/// R^{N^2-1}. These are not all states for N >= 3; the gap is the point.
inline BlochVector sample_ball_uniform(int n, Sampler& rng) {
  const int d = generator_count(n);
  RVector direction(d);
  for (int i = 0; i < d; ++i) direction[i] = rng.normal();
  direction.normalize();
  const double radius = ball_radius(n) * std::pow(rng.uniform(), 1.0 / d);
  return BlochVector{n, radius * direction};
}

/// One Bloch vector of the requested kind.
inline BlochVector sample_state(int n, SampleKind kind, Sampler& rng,
                                const GeneratorBasis& basis) {
  if (basis.n != n) throw DomainError("sample_state: basis level count mismatch");
  switch (kind) {
    case SampleKind::Pure: return matrix_to_bloch(sample_pure_state(n, rng), basis);
    case SampleKind::Mixed: return matrix_to_bloch(sample_mixed_state(n, rng), basis);
    case SampleKind::BallUniform: return sample_ball_uniform(n, rng);
  }
  throw DomainError("sample_state: unknown kind");
}

/// Deterministic stream of `count` Bloch vectors for the given seed.
inline std::vector<BlochVector> sample_states(int n, int count, SampleKind kind,
                                              std::uint64_t seed, const GeneratorBasis& basis) {
  if (count < 1) throw DomainError("sample_states: count must be >= 1");
  Sampler rng(seed);
  std::vector<BlochVector> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_state(n, kind, rng, basis));
  return out;
}

}  // namespace bloch
