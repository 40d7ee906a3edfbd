#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bloch/membership.hpp"
#include "bloch/sampling.hpp"
#include "helpers.hpp"

using namespace bloch;

namespace {

DensityCandidate diag_state(std::initializer_list<double> entries) {
  const int n = static_cast<int>(entries.size());
  CMatrix m = CMatrix::Zero(n, n);
  int i = 0;
  for (double e : entries) m(i, i) = e, ++i;
  return DensityCandidate{n, std::move(m)};
}

BlochVector lambda8_only(double value) {
  RVector c = RVector::Zero(8);
  c[7] = value;
  return BlochVector{3, std::move(c)};
}

MomentVector moments_of_roots(const std::vector<double>& roots) {
  MomentVector m;
  m.n = static_cast<int>(roots.size());
  m.c = testutil::power_sums(roots, m.n);
  return m;
}

}  // namespace

TEST_CASE("trace powers of the worked examples") {
  const MomentVector half = moments_trace(diag_state({0.5, 0.5}), 2);
  CHECK(half.c[0] == doctest::Approx(1.0));
  CHECK(half.c[1] == doctest::Approx(0.5));

  const MomentVector pure = moments_trace(diag_state({1.0, 0.0, 0.0}), 3);
  for (double c : pure.c) CHECK(c == doctest::Approx(1.0));

  const MomentVector mixed = moments_trace(diag_state({1.0 / 3, 1.0 / 3, 1.0 / 3}), 3);
  CHECK(mixed.c[0] == doctest::Approx(1.0));
  CHECK(mixed.c[1] == doctest::Approx(1.0 / 3.0));
  CHECK(mixed.c[2] == doctest::Approx(1.0 / 9.0));

  CHECK_THROWS_AS(moments_trace(diag_state({1.0, 0.0}), 0), DomainError);
}

TEST_CASE("closed-form moments match the trace route") {
  for (int n = 2; n <= 5; ++n) {
    const GeneratorBasis basis = build_generator_basis(n);
    const StructureConstants sc = compute_structure_constants(basis);

    const BlochVector zero{n, RVector::Zero(generator_count(n))};
    CHECK(moments_closed_form(zero, sc, 2) == doctest::Approx(1.0 / n).epsilon(1e-14));

    Sampler rng(101);
    for (int trial = 0; trial < 60; ++trial) {
      const BlochVector v = sample_ball_uniform(n, rng);
      const MomentVector oracle = moments_trace(bloch_to_matrix(v, basis), 4);
      for (int q = 2; q <= 4; ++q)
        CHECK(moments_closed_form(v, sc, q) == doctest::Approx(oracle.c[q - 1]).epsilon(1e-10));
    }
  }

  const StructureConstants sc3 = compute_structure_constants(build_generator_basis(3));
  // diag(0,0,1) is pure, so every trace power is 1.
  CHECK(moments_closed_form(lambda8_only(-2.0 / std::sqrt(3.0)), sc3, 3) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(moments_closed_form(lambda8_only(0.1), sc3, 5), DomainError);
}

TEST_CASE("Newton recursion reproduces elementary symmetric polynomials") {
  // Roots {1,2,3}: C = (6, 14, 36), e = (1, 6, 11, 6).
  const std::vector<double> roots{1.0, 2.0, 3.0};
  CHECK(testutil::power_sums(roots, 3) == std::vector<double>{6.0, 14.0, 36.0});
  CHECK(testutil::elementary_symmetric(roots) == std::vector<double>{1.0, 6.0, 11.0, 6.0});

  const CoefficientVector coeff = char_coefficients_newton(moments_of_roots(roots));
  REQUIRE(coeff.a.size() == 4);
  CHECK(coeff.a[0] == 1.0);
  CHECK(coeff.a[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(coeff.a[2] == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(coeff.a[3] == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed 3-level coefficients expand (x - 1/3)^3") {
  const CoefficientVector coeff =
      char_coefficients_newton(moments_trace(diag_state({1.0 / 3, 1.0 / 3, 1.0 / 3}), 3));
  CHECK(coeff.a[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(coeff.a[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(coeff.a[3] == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("a_1 = 1 for any unit-trace input") {
  Sampler rng(3);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const DensityCandidate rho = sample_mixed_state(n, rng);
      const CoefficientVector coeff = char_coefficients_newton(moments_trace(rho, n));
      CHECK(coeff.a[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("insufficient moments are rejected") {
  MomentVector m;
  m.n = 4;
  m.c = {1.0, 0.5};
  CHECK_THROWS_AS(char_coefficients_newton(m), DomainError);
}

TEST_CASE("closed-form coefficients at the pinned points") {
  const StructureConstants sc3 = compute_structure_constants(build_generator_basis(3));
  const CoefficientVector at_zero =
      char_coefficients_closed_form(BlochVector{3, RVector::Zero(8)}, sc3);
  CHECK(at_zero.a[1] == doctest::Approx(1.0));
  CHECK(at_zero.a[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(at_zero.a[3] == doctest::Approx(1.0 / 27.0).epsilon(1e-14));

  const StructureConstants sc2 = compute_structure_constants(build_generator_basis(2));
  RVector pure2(3);
  pure2 << 0.6, 0.0, 0.8;
  const CoefficientVector pure_coeff = char_coefficients_closed_form(BlochVector{2, pure2}, sc2);
  CHECK(pure_coeff.a[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("closed-form coefficients agree with the Newton path") {
  for (int n = 3; n <= 6; ++n) {
    const GeneratorBasis basis = build_generator_basis(n);
    const StructureConstants sc = compute_structure_constants(basis);
    Sampler rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
      const BlochVector v = sample_ball_uniform(n, rng);
      const CoefficientVector closed = char_coefficients_closed_form(v, sc);
      const CoefficientVector newton =
          char_coefficients_newton(moments_trace(bloch_to_matrix(v, basis), n));
      for (int k = 1; k <= std::min(n, 4); ++k) {
        INFO("n=", n, " k=", k);
        CHECK(closed.a[k] == doctest::Approx(newton.a[k]).epsilon(1e-10));
      }
      CHECK(2.0 * closed.a[2] == doctest::Approx(1.0 - purity(v)).epsilon(1e-12));
    }
  }
}

TEST_CASE("coefficient positivity test on frozen root sets") {
  // {1,2,3} -> all positive; {-1,2,3} -> e = (1,4,1,-6).
  CHECK(testutil::elementary_symmetric({-1.0, 2.0, 3.0}) ==
        std::vector<double>{1.0, 4.0, 1.0, -6.0});

  CoefficientVector good{3, {1.0, 6.0, 11.0, 6.0}};
  CHECK(positivity_from_coefficients(good, 1e-9));

  CoefficientVector bad{3, {1.0, 4.0, 1.0, -6.0}};
  CHECK_FALSE(positivity_from_coefficients(bad, 1e-9));

  CoefficientVector boundary{2, {1.0, 1.0, 0.0}};
  CHECK(positivity_from_coefficients(boundary, 0.0));
  CHECK(positivity_from_coefficients(boundary, 1e-9));
}

TEST_CASE("membership verdicts at the pinned vectors") {
  const GeneratorBasis basis2 = build_generator_basis(2);
  RVector pure2(3);
  pure2 << 0.6, 0.0, 0.8;
  const MembershipVerdict pure_v = is_bloch_vector(BlochVector{2, pure2}, basis2);
  CHECK(pure_v.decision == Decision::Boundary);
  CHECK_FALSE(pure_v.failing_index.has_value());

  const GeneratorBasis basis3 = build_generator_basis(3);
  const MembershipVerdict outside = is_bloch_vector(lambda8_only(2.0 / std::sqrt(3.0)), basis3);
  CHECK(outside.decision == Decision::Outside);
  REQUIRE(outside.failing_index.has_value());
  CHECK(*outside.failing_index == 3);
  CHECK(outside.margins[2] == doctest::Approx(-4.0 / 27.0).epsilon(1e-12));

  const MembershipVerdict boundary = is_bloch_vector(lambda8_only(-2.0 / std::sqrt(3.0)), basis3);
  CHECK(boundary.decision == Decision::Boundary);

  // Far outside the ball: still processed, fails at a_2.
  const MembershipVerdict far = is_bloch_vector(lambda8_only(10.0 * ball_radius(3)), basis3);
  CHECK(far.decision == Decision::Outside);
  REQUIRE(far.failing_index.has_value());
  CHECK(*far.failing_index == 2);
}

TEST_CASE("eigenvalue oracle on the pinned matrices") {
  CHECK(eigenvalue_oracle(diag_state({0.5, 0.5})).decision == Decision::Inside);
  const MembershipVerdict neg = eigenvalue_oracle(diag_state({2.0 / 3, 2.0 / 3, -1.0 / 3}));
  CHECK(neg.decision == Decision::Outside);
  CHECK(neg.min_margin() == doctest::Approx(-1.0 / 3.0));
  CHECK(eigenvalue_oracle(diag_state({1.0, 0.0})).decision == Decision::Boundary);
}

TEST_CASE("coefficient test and eigenvalue oracle agree off the boundary band") {
  for (int n = 2; n <= 5; ++n) {
    const GeneratorBasis basis = build_generator_basis(n);
    Sampler rng(777);
    int compared = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const BlochVector v = sample_ball_uniform(n, rng);
      const MembershipVerdict coeff = is_bloch_vector(v, basis);
      const MembershipVerdict eigen = eigenvalue_oracle(bloch_to_matrix(v, basis));
      if (coeff.decision == Decision::Boundary || eigen.decision == Decision::Boundary) continue;
      ++compared;
      CHECK(coeff.decision == eigen.decision);
    }
    CHECK(compared > 1500);
  }
}

TEST_CASE("N=2 membership is exactly the unit-ball test") {
  const GeneratorBasis basis = build_generator_basis(2);
  Sampler rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    RVector c(3);
    for (int i = 0; i < 3; ++i) c[i] = 2.4 * (rng.uniform() - 0.5);
    const BlochVector v{2, c};
    const double norm = c.norm();
    if (std::abs(norm - 1.0) < 1e-8) continue;
    const MembershipVerdict verdict = is_bloch_vector(v, basis);
    CHECK(verdict.decision == (norm < 1.0 ? Decision::Inside : Decision::Outside));
  }
}

TEST_CASE("Vieta: nonnegative roots give nonnegative coefficients matching Newton") {
  Sampler rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 1 + static_cast<int>(rng.uniform() * 8);
    std::vector<double> roots(size);
    for (double& r : roots) r = 2.0 * rng.uniform();
    const std::vector<double> direct = testutil::elementary_symmetric(roots);
    for (double e : direct) CHECK(e >= 0.0);
    const CoefficientVector viaNewton = char_coefficients_newton(moments_of_roots(roots));
    for (std::size_t k = 0; k < direct.size(); ++k)
      CHECK(viaNewton.a[k] == doctest::Approx(direct[k]).epsilon(1e-10));
  }
}

TEST_CASE("a negative root always surfaces as a negative coefficient") {
  Sampler rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 2 + static_cast<int>(rng.uniform() * 7);
    std::vector<double> roots(size);
    for (double& r : roots) r = -1.0 + 3.0 * rng.uniform();
    roots[static_cast<std::size_t>(rng.uniform() * size)] =
        -1e-6 - rng.uniform();  // force one clearly negative root
    const std::vector<double> coeffs = testutil::elementary_symmetric(roots);
    CHECK(*std::min_element(coeffs.begin(), coeffs.end()) < 0.0);
  }
}

TEST_CASE("synthetic deflation: a_i = a~_i + a~_{i-1} x_N") {
  Sampler rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 2 + static_cast<int>(rng.uniform() * 6);
    std::vector<double> roots(size);
    for (double& r : roots) r = -2.0 + 4.0 * rng.uniform();
    const double last = roots.back();
    const std::vector<double> full = testutil::elementary_symmetric(roots);
    std::vector<double> deflated_roots(roots.begin(), roots.end() - 1);
    std::vector<double> tilde = testutil::elementary_symmetric(deflated_roots);
    tilde.push_back(0.0);  // a~_N = 0
    for (int i = 1; i <= size; ++i)
      CHECK(full[i] == doctest::Approx(tilde[i] + tilde[i - 1] * last).epsilon(1e-10));
  }
}

TEST_CASE("inside verdicts respect the enclosing ball") {
  const GeneratorBasis basis = build_generator_basis(4);
  Sampler rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const BlochVector v = sample_ball_uniform(4, rng);
    if (is_bloch_vector(v, basis).decision == Decision::Inside)
      CHECK(v.components.norm() <= ball_radius(4) + 1e-9);
  }
}
