#pragma once

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "bloch/generators.hpp"
#include "bloch/types.hpp"

namespace bloch {

/// Sparse structure constants of su(N) in a given generator basis:
///   [M_i, M_j]  = 2i f_ijk M_k      (f totally antisymmetric)
///   {M_i, M_j}  = (4/N) d_ij I + 2 g_ijk M_k   (g totally symmetric)
///
/// Only one canonical index ordering is stored (i < j < k for f, i <= j <= k
/// for g, 1-based); lookups apply the permutation sign / symmetry. Entries
/// with magnitude below the drop threshold (1e-12) are not stored.
struct StructureConstants {
  using Key = std::array<int, 3>;

  int n = 0;
  std::map<Key, double> f;
  std::map<Key, double> g;

  int dim() const { return generator_count(n); }

  /// f_ijk for arbitrary 1-based indices; zero on repeated indices.
  double f_at(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j || j == k || i == k) return 0.0;
    int sign = 1;
    int a = i, b = j, c = k;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (b > c) { std::swap(b, c); sign = -sign; }
    if (a > b) { std::swap(a, b); sign = -sign; }
    auto it = f.find({a, b, c});
    return it == f.end() ? 0.0 : sign * it->second;
  }

  /// g_ijk for arbitrary 1-based indices.
  double g_at(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    int a = i, b = j, c = k;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    auto it = g.find({a, b, c});
    return it == g.end() ? 0.0 : it->second;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > dim())
      throw DomainError("structure constants: index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(dim()));
  }
};

/// Computes f and g by tracing commutators and anticommutators against the
/// basis:
///   f_ijk = tr([M_i, M_j] M_k) / (4i),   g_ijk = tr({M_i, M_j} M_k) / 4.
/// Both traces are mathematically real (imaginary residue is checked and
/// discarded). Rejects a basis violating its orthogonality invariants.
inline StructureConstants compute_structure_constants(const GeneratorBasis& basis,
                                                      double drop_tol = 1e-12) {
  validate_generator_basis(basis);
  const int d = basis.dim();
  StructureConstants sc;
  sc.n = basis.n;

  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      const CMatrix prod_ij = basis.matrices[i - 1] * basis.matrices[j - 1];
      const CMatrix prod_ji = basis.matrices[j - 1] * basis.matrices[i - 1];
      const CMatrix comm = prod_ij - prod_ji;
      const CMatrix anti = prod_ij + prod_ji;
      for (int k = j; k <= d; ++k) {
        const CMatrix& mk = basis.matrices[k - 1];
        if (i < j && j < k) {
          const cplx tf = (comm * mk).trace() / cplx(0.0, 4.0);
          if (std::abs(tf.imag()) > 1e-10)
            throw DomainError("compute_structure_constants: f trace has imaginary residue");
          if (std::abs(tf.real()) > drop_tol) sc.f[{i, j, k}] = tf.real();
        }
        const cplx tg = (anti * mk).trace() / 4.0;
        if (std::abs(tg.imag()) > 1e-10)
          throw DomainError("compute_structure_constants: g trace has imaginary residue");
        if (std::abs(tg.real()) > drop_tol) sc.g[{i, j, k}] = tg.real();
      }
    }
  }
  return sc;
}

/// w_m = g_ijm v_i v_j, the rank-1 contraction of g against v (1-based m,
/// returned 0-based). Building block of the closed-form moments:
/// g_ijk v_i v_j v_k = w . v and g_ijm g_mkl v_i v_j v_k v_l = |w|^2.
inline RVector g_pair_contraction(const StructureConstants& sc, const RVector& v) {
  const int d = sc.dim();
  if (v.size() != d)
    throw DomainError("g_pair_contraction: vector length must equal N^2-1");
  RVector w = RVector::Zero(d);
  for (const auto& [key, value] : sc.g) {
    const int a = key[0], b = key[1], c = key[2];
    // Scatter over the distinct permutations of the stored canonical triple.
    if (a == b && b == c) {
      w[c - 1] += value * v[a - 1] * v[b - 1];
    } else if (a == b) {
      w[c - 1] += value * v[a - 1] * v[b - 1];
      w[b - 1] += 2.0 * value * v[a - 1] * v[c - 1];
    } else if (b == c) {
      w[a - 1] += value * v[b - 1] * v[c - 1];
      w[c - 1] += 2.0 * value * v[a - 1] * v[b - 1];
    } else {
      w[c - 1] += 2.0 * value * v[a - 1] * v[b - 1];
      w[b - 1] += 2.0 * value * v[a - 1] * v[c - 1];
      w[a - 1] += 2.0 * value * v[b - 1] * v[c - 1];
    }
  }
  return w;
}

/// g_ijk v_i v_j v_k (full symmetric sum over all index triples).
inline double g_cubic_form(const StructureConstants& sc, const RVector& v) {
  return g_pair_contraction(sc, v).dot(v);
}

/// g_ijm g_mkl v_i v_j v_k v_l.
inline double g_quartic_form(const StructureConstants& sc, const RVector& v) {
  return g_pair_contraction(sc, v).squaredNorm();
}

}  // namespace bloch
