#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "nbho/analytic.hpp"
#include "nbho/eigensolver.hpp"
#include "nbho/errors.hpp"
#include "nbho/jmatrix.hpp"
#include "test_helpers.hpp"

using namespace nbho;
using nbho::testing::all_pairs;
using nbho::testing::make_system;

TEST_CASE("detect mass-proportional one-body strengths") {
  const ParticleSystem sys = make_system({1, 2, 3}, {0.5, 1.0, 1.5});
  const AnalyticCondition cond = detect(sys);
  REQUIRE(cond.one_body_rho.has_value());
  CHECK(*cond.one_body_rho == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("detect mass-product couplings: beta and the first row") {
  const ParticleSystem sys = make_system(
      {1, 2, 3}, {}, all_pairs(3, [](int i, int j) { return 2.0 * i * j; }));
  const AnalyticCondition cond = detect(sys);
  REQUIRE(cond.product_beta.has_value());
  CHECK(*cond.product_beta == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(cond.two_body_row.has_value());
  CHECK((*cond.two_body_row)[0] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK((*cond.two_body_row)[1] == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("a coupling set off the row pattern is not detected") {
  // with equal masses the pattern would need g_23 == g_13 = 2
  const ParticleSystem sys = make_system(
      {1, 1, 1}, {}, {{1, 2, 1.0}, {1, 3, 2.0}, {2, 3, 1.0}});
  const AnalyticCondition cond = detect(sys);
  CHECK(!cond.two_body_row.has_value());
  CHECK(!cond.product_beta.has_value());
}

TEST_CASE("all-zero couplings detect as rho = 0 with a zero row") {
  const ParticleSystem sys = make_system({1, 2});
  const AnalyticCondition cond = detect(sys);
  REQUIRE(cond.one_body_rho.has_value());
  CHECK(*cond.one_body_rho == 0.0);
  CHECK(cond.two_body_row.has_value());
  CHECK(cond.product_beta.has_value());
}

TEST_CASE("one-body-only closed form: all omega equal sqrt(2 rho)") {
  const ParticleSystem sys = make_system({1, 2, 3, 4}, {2, 4, 6, 8});
  const std::vector<double> omega = analytic_frequencies(sys, detect(sys));
  REQUIRE(omega.size() == 3);
  for (double w : omega) CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("mass-product closed form: all omega equal sqrt(2 beta M)") {
  const ParticleSystem sys = make_system(
      {1, 2, 3}, {}, all_pairs(3, [](int i, int j) { return 2.0 * i * j; }));
  const std::vector<double> omega = analytic_frequencies(sys, detect(sys));
  for (double w : omega)
    CHECK(w == doctest::Approx(std::sqrt(24.0)).epsilon(1e-12));
}

TEST_CASE("identical particles with uniform coupling: omega = sqrt(2 g N / m)") {
  const double g = 0.9, m = 1.7;
  const ParticleSystem sys =
      make_system({m, m, m}, {}, all_pairs(3, [&](int, int) { return g; }));
  const std::vector<double> omega = analytic_frequencies(sys, detect(sys));
  for (double w : omega)
    CHECK(w == doctest::Approx(std::sqrt(6.0 * g / m)).epsilon(1e-12));
}

TEST_CASE("inconsistent condition is rejected") {
  const ParticleSystem proportional = make_system({1, 2}, {1, 2});
  const AnalyticCondition cond = detect(proportional);
  const ParticleSystem other = make_system({1, 2}, {1, 5});
  CHECK_THROWS_WITH_AS(analytic_frequencies(other, cond),
                       doctest::Contains("ConditionNotSatisfied"), InputError);
}

TEST_CASE("negative rho alone is unstable") {
  const ParticleSystem sys = make_system({1, 2}, {-1, -2});
  CHECK_THROWS_AS(analytic_frequencies(sys, detect(sys)),
                  UnstableSystemError);
}

TEST_CASE("analytic energies") {
  SUBCASE("one-body only, four particles, D=1 ground state") {
    const ParticleSystem sys =
        make_system({1, 2, 3, 4}, {0.5, 1.0, 1.5, 2.0}, {}, 1);
    const double e =
        analytic_energy(sys, detect(sys), QuantumState::ground(3));
    CHECK(e == doctest::Approx(1.5).epsilon(1e-13));
  }
  SUBCASE("mass-product couplings, D=3 ground state") {
    const ParticleSystem sys = make_system(
        {1, 2, 3}, {}, all_pairs(3, [](int i, int j) { return 2.0 * i * j; }));
    const double e =
        analytic_energy(sys, detect(sys), QuantumState::ground(2));
    CHECK(e == doctest::Approx(3.0 * std::sqrt(24.0)).epsilon(1e-12));
    // cross-checked against the numeric spectrum
    const Spectrum spec = spectrum_from_j(build_J(sys), sys);
    double e_num = 0.0;
    for (double w : spec.omega) e_num += 1.5 * w;
    CHECK(e == doctest::Approx(e_num).epsilon(1e-12));
  }
  SUBCASE("raising one mode by delta-n = 1 in D=3 adds exactly 2 omega") {
    const ParticleSystem sys = make_system({1, 1, 1}, {2, 2, 2});
    const AnalyticCondition cond = detect(sys);
    const std::vector<double> omega = analytic_frequencies(sys, cond);
    QuantumState excited = QuantumState::ground(2);
    excited.modes[1].n = 1;
    const double diff = analytic_energy(sys, cond, excited) -
                        analytic_energy(sys, cond, QuantumState::ground(2));
    CHECK(diff == doctest::Approx(2.0 * omega[1]).epsilon(1e-13));
  }
  SUBCASE("state size mismatch") {
    const ParticleSystem sys = make_system({1, 1}, {1, 1});
    CHECK_THROWS_AS(
        analytic_energy(sys, detect(sys), QuantumState::ground(5)),
        InputError);
  }
}

TEST_CASE("combined closed form agrees with diagonalization") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> log_mass(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> g_dist(0.1, 2.0);
  std::uniform_real_distribution<double> rho_dist(0.1, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    SystemInput in;
    in.dimension = 3;
    const int n = 2 + static_cast<int>(rng() % 7);
    const double rho = rho_dist(rng);
    for (int i = 0; i < n; ++i) in.masses.push_back(std::exp(log_mass(rng)));
    for (int i = 0; i < n; ++i) in.one_body.push_back(rho * in.masses[i]);
    std::vector<double> row(n + 1, 0.0);
    for (int j = 2; j <= n; ++j) row[j] = g_dist(rng);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        in.two_body.push_back({i, j, row[j] * in.masses[i - 1] / in.masses[0]});
    const ParticleSystem sys = validate_system(in);

    std::vector<double> analytic = analytic_frequencies(sys, detect(sys));
    std::sort(analytic.begin(), analytic.end());
    const Spectrum spec = spectrum_from_j(build_J(sys), sys);
    CHECK(nbho::testing::max_rel_dev(analytic, spec.omega) <= 1e-10);
  }
}

TEST_CASE("detection scales with the couplings") {
  const double c = 3.5;
  const ParticleSystem base =
      make_system({1, 2, 4}, {0.3, 0.6, 1.2},
                  all_pairs(3, [](int i, int j) { return 0.25 * i * j; }));
  SystemInput scaled;
  scaled.dimension = base.dimension();
  scaled.masses = base.masses();
  for (double k : base.one_body()) scaled.one_body.push_back(c * k);
  for (TwoBodyEntry e : base.two_body_entries()) {
    e.g *= c;
    scaled.two_body.push_back(e);
  }
  const AnalyticCondition c0 = detect(base);
  const AnalyticCondition c1 = detect(validate_system(scaled));
  REQUIRE((c0.one_body_rho && c1.one_body_rho));
  CHECK(*c1.one_body_rho == doctest::Approx(c * *c0.one_body_rho));
  REQUIRE((c0.two_body_row && c1.two_body_row));
  for (std::size_t j = 0; j < c0.two_body_row->size(); ++j)
    CHECK((*c1.two_body_row)[j] ==
          doctest::Approx(c * (*c0.two_body_row)[j]).epsilon(1e-13));
}
