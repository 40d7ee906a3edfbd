#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bloch/membership.hpp"
#include "bloch/statemap.hpp"
#include "bloch/structure_constants.hpp"
#include "bloch/types.hpp"

namespace bloch {

inline constexpr double kSqrt3 = 1.7320508075688772935;
inline constexpr double kTwoPi = 6.2831853071795864769;

/// 2-dimensional section of the N=3 Bloch-vector space: all components zero
/// except the two named axes, sampled on a square grid.
struct SectionSpec {
  int i = 0;
  int j = 0;
  int resolution = 401;
  double range = 2.0 / kSqrt3;
};

enum class SectionKind { TypeI, TypeII, TypeIII, TypeIV };

inline const char* to_string(SectionKind k) {
  switch (k) {
    case SectionKind::TypeI: return "I";
    case SectionKind::TypeII: return "II";
    case SectionKind::TypeIII: return "III";
    case SectionKind::TypeIV: return "IV";
  }
  return "?";
}

/// Section classification. sign is meaningful only for TypeII, where the
/// lambda_3 axis enters negated for i in {6,7}.
struct SectionClass {
  SectionKind kind = SectionKind::TypeIV;
  int sign = 1;
};

enum class SectionCell { In, BallOnly, Out };

inline const char* to_string(SectionCell c) {
  switch (c) {
    case SectionCell::In: return "IN";
    case SectionCell::BallOnly: return "BALL_ONLY";
    case SectionCell::Out: return "OUT";
  }
  return "?";
}

/// One grid point of a sampled section in raw (unnegated) coordinates.
struct GridVerdict {
  double li = 0.0;
  double lj = 0.0;
  SectionCell cell = SectionCell::Out;
};

namespace detail {

inline void check_section_index(int i) {
  if (i < 1 || i > 8) throw DomainError("section: axis index must be in 1..8");
}

}  // namespace detail

/// Orders a section axis pair so the distinguished axis comes second:
/// lambda_8 for pairs containing it, lambda_3 for {3,k} with k in 4..7,
/// otherwise ascending. closed_form_section_test expects this orientation.
inline std::pair<int, int> canonical_section_axes(int i, int j) {
  detail::check_section_index(i);
  detail::check_section_index(j);
  if (i == j) throw DomainError("section: axis indices must differ");
  if (i == 8) return {j, 8};
  if (j == 8) return {i, 8};
  if (i == 3 && j >= 4 && j <= 7) return {j, 3};
  if (j == 3 && i >= 4 && i <= 7) return {i, 3};
  return {std::min(i, j), std::max(i, j)};
}

/// Classifies the section spanned by axes {i, j}:
///   Type I   {k, 8} with k in {1,2,3}
///   Type II  {k, 3} with k in {4,5} (sign +1) or k in {6,7} (sign -1)
///   Type III {k, 8} with k in {4,5,6,7}
///   Type IV  otherwise
inline SectionClass classify_section(int i, int j) {
  const auto [a, b] = canonical_section_axes(i, j);
  if (b == 8) {
    if (a >= 1 && a <= 3) return {SectionKind::TypeI, 1};
    return {SectionKind::TypeIII, 1};
  }
  if (b == 3 && a >= 4 && a <= 7) return {SectionKind::TypeII, a <= 5 ? 1 : -1};
  return {SectionKind::TypeIV, 1};
}

/// 18 x (3! a_3) on the full 8-component vector:
///   4 - 9 |v|^2 + 9 g_ijk v_i v_j v_k  =  108 a_3.
/// Nonnegative exactly where the a_3 membership condition holds.
inline double a3_margin(const BlochVector& v, const StructureConstants& sc) {
  validate_bloch_vector(v);
  if (v.n != 3) throw DomainError("a3_margin: defined for 3-level systems only");
  if (sc.n != 3) throw DomainError("a3_margin: structure constants must be for N=3");
  return 4.0 - 9.0 * v.components.squaredNorm() + 9.0 * g_cubic_form(sc, v.components);
}

/// Closed-form membership predicate on a section, in canonical orientation
/// (li along the generic axis, lj along the distinguished axis):
///   Type I   lj <= 1/sqrt(3), lj >= +-sqrt(3) li - 2/sqrt(3)
///   Type II  after lj *= sign: lj <= 2/3, lj >= (3/2) li^2 - 2/3
///   Type III 2 li^2 + (4/3)(lj + sqrt(3)/6)^2 <= 1
///   Type IV  li^2 + lj^2 <= (2/3)^2
/// each combined with the ball condition li^2 + lj^2 <= 4/3.
inline bool closed_form_section_test(const SectionClass& cls, double li, double lj) {
  if (li * li + lj * lj > 4.0 / 3.0) return false;
  switch (cls.kind) {
    case SectionKind::TypeI:
      return lj <= 1.0 / kSqrt3 && lj >= kSqrt3 * li - 2.0 / kSqrt3 &&
             lj >= -kSqrt3 * li - 2.0 / kSqrt3;
    case SectionKind::TypeII: {
      const double t = cls.sign * lj;
      return t <= 2.0 / 3.0 && t >= 1.5 * li * li - 2.0 / 3.0;
    }
    case SectionKind::TypeIII: {
      const double shifted = lj + kSqrt3 / 6.0;
      return 2.0 * li * li + (4.0 / 3.0) * shifted * shifted <= 1.0;
    }
    case SectionKind::TypeIV:
      return li * li + lj * lj <= 4.0 / 9.0;
  }
  return false;
}

/// Evaluates the full membership test at every grid point of the (i, j)
/// plane, all other components zero. Cells: In if the point is a member
/// (boundary maps to In, closed-set convention), BallOnly if only the a_2
/// ball condition holds, Out otherwise. Row-major emission, j fastest.
inline std::vector<GridVerdict> sample_section(const SectionSpec& spec,
                                               const GeneratorBasis& basis,
                                               double tol = kDefaultTol) {
  detail::check_section_index(spec.i);
  detail::check_section_index(spec.j);
  if (spec.i == spec.j) throw DomainError("sample_section: axis indices must differ");
  if (spec.resolution < 3) throw DomainError("sample_section: resolution must be >= 3");
  if (spec.range <= 0.0) throw DomainError("sample_section: range must be positive");
  if (basis.n != 3) throw DomainError("sample_section: basis must be for N=3");

  const int res = spec.resolution;
  const double step = 2.0 * spec.range / (res - 1);
  std::vector<GridVerdict> grid;
  grid.reserve(static_cast<std::size_t>(res) * res);

  BlochVector v{3, RVector::Zero(8)};
  for (int r = 0; r < res; ++r) {
    const double li = -spec.range + r * step;
    for (int s = 0; s < res; ++s) {
      const double lj = -spec.range + s * step;
      v.components[spec.i - 1] = li;
      v.components[spec.j - 1] = lj;
      const MembershipVerdict verdict = is_bloch_vector(v, basis, tol);
      SectionCell cell;
      if (verdict.decision != Decision::Outside) {
        cell = SectionCell::In;
      } else if (verdict.margins[1] >= -tol) {
        cell = SectionCell::BallOnly;
      } else {
        cell = SectionCell::Out;
      }
      grid.push_back({li, lj, cell});
    }
  }
  return grid;
}

/// Closed-form boundary curve of a section's membership region as polyline
/// segments in canonical orientation, for plotting against sampled grids.
struct BoundarySegment {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

inline std::vector<BoundarySegment> section_boundary(const SectionClass& cls,
                                                     int points_per_segment = 257) {
  const int m = points_per_segment;
  std::vector<BoundarySegment> segments;
  auto lerp = [m](double a, double b, int t) { return a + (b - a) * t / (m - 1.0); };
  switch (cls.kind) {
    case SectionKind::TypeI: {
      const std::pair<double, double> apex{0.0, -2.0 / kSqrt3};
      const std::pair<double, double> right{1.0, 1.0 / kSqrt3};
      const std::pair<double, double> left{-1.0, 1.0 / kSqrt3};
      const std::pair<double, double> corners[4] = {apex, right, left, apex};
      const char* names[3] = {"edge_right", "edge_top", "edge_left"};
      for (int e = 0; e < 3; ++e) {
        BoundarySegment seg{names[e], {}};
        for (int t = 0; t < m; ++t)
          seg.points.emplace_back(lerp(corners[e].first, corners[e + 1].first, t),
                                  lerp(corners[e].second, corners[e + 1].second, t));
        segments.push_back(std::move(seg));
      }
      break;
    }
    case SectionKind::TypeII: {
      const double smax = 2.0 * std::sqrt(2.0) / 3.0;
      BoundarySegment parabola{"parabola", {}};
      for (int t = 0; t < m; ++t) {
        const double s = lerp(-smax, smax, t);
        parabola.points.emplace_back(s, cls.sign * (1.5 * s * s - 2.0 / 3.0));
      }
      segments.push_back(std::move(parabola));
      BoundarySegment cap{"cap", {}};
      for (int t = 0; t < m; ++t)
        cap.points.emplace_back(lerp(smax, -smax, t), cls.sign * (2.0 / 3.0));
      segments.push_back(std::move(cap));
      break;
    }
    case SectionKind::TypeIII: {
      BoundarySegment ellipse{"ellipse", {}};
      for (int t = 0; t < m; ++t) {
        const double theta = kTwoPi * t / (m - 1.0);
        ellipse.points.emplace_back(std::cos(theta) / std::sqrt(2.0),
                                    -kSqrt3 / 6.0 + (kSqrt3 / 2.0) * std::sin(theta));
      }
      segments.push_back(std::move(ellipse));
      break;
    }
    case SectionKind::TypeIV: {
      BoundarySegment circle{"circle", {}};
      for (int t = 0; t < m; ++t) {
        const double theta = kTwoPi * t / (m - 1.0);
        circle.points.emplace_back((2.0 / 3.0) * std::cos(theta),
                                   (2.0 / 3.0) * std::sin(theta));
      }
      segments.push_back(std::move(circle));
      break;
    }
  }
  return segments;
}

}  // namespace bloch
