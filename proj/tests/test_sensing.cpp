#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jamsec/params.hpp"
#include "jamsec/rng.hpp"
#include "jamsec/sensing.hpp"
#include "oracles.hpp"

using namespace jamsec;

TEST_CASE("q_function and its inverse") {
  CHECK(q_function(0.0) == 0.5);
  CHECK(q_inverse(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q_function(1.6449) == doctest::Approx(0.05).epsilon(2e-3));
  CHECK(std::fabs(q_function(1.6449) - 0.04999521746834631) < 1e-12);
  for (double x : {-3.0, -0.5, 0.7, 2.2, 6.0}) {
    CHECK(q_function(x) == doctest::Approx(1.0 - oracle::phi(x)).epsilon(1e-12));
    CHECK(q_inverse(q_function(x)) == doctest::Approx(x).epsilon(1e-10));
  }
  CHECK_THROWS_AS(q_inverse(0.0), std::domain_error);
  CHECK_THROWS_AS(q_inverse(1.0), std::domain_error);
  CHECK_THROWS_AS(q_inverse(-0.2), std::domain_error);
}

TEST_CASE("sample_count rules") {
  CHECK(sample_count(1e-4, 1e6, SampleCountRule::Nyquist) == 100);
  CHECK(sample_count(10.0, 0.5, SampleCountRule::InverseBandwidth) == 20);
  CHECK_THROWS_AS(sample_count(1e-4, 1e6, SampleCountRule::InverseBandwidth), ConfigError);
  CHECK_THROWS_AS(sample_count(1e-7, 1e6, SampleCountRule::Nyquist), ConfigError);
}

TEST_CASE("detector spec validation") {
  CHECK_THROWS_AS((DetectorSpec{0, 0.1, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((DetectorSpec{10, 0.0, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((DetectorSpec{10, 0.1, 0.0}.validate()), ConfigError);
  CHECK_NOTHROW((DetectorSpec{10, 0.1, 1.0}.validate()));
}

TEST_CASE("missed detection integral: limits and structure") {
  CHECK(p_md_analytic({1'000'000, 0.1, 1.0}) < 1e-3);

  // P_FA = 0.5 puts the threshold at 1, so the integrand is Q(sqrt(N)(1/Z - 1)).
  const double direct = oracle::p_md_simpson(50, 0.5, 3.0);
  CHECK(p_md_analytic({50, 0.5, 3.0}) == doctest::Approx(direct).epsilon(1e-7));

  // More samples or a stronger signal can only help the detector.
  CHECK(p_md_analytic({100, 0.1, 1.0}) < p_md_analytic({10, 0.1, 1.0}));
  CHECK(p_md_analytic({100, 0.1, 10.0}) < p_md_analytic({100, 0.1, 1.0}));
  CHECK(p_md_analytic({100, 0.2, 1.0}) < p_md_analytic({100, 0.05, 1.0}));
}

TEST_CASE("missed detection integral against frozen reference values") {
  struct Row {
    int n;
    double p_fa, g, ref;
  };
  // Reference values from an independent adaptive quadrature over the SNR.
  const Row rows[] = {
      {100, 0.1, 10.0, 0.014206788292027067},
      {10, 0.1, 1.0, 0.3619970340762068},
      {10, 0.05, 10.0, 0.07018007503166844},
      {100, 0.05, 1.0, 0.15749145729634803},
      {1000, 0.1, 1.0, 0.04161602473581568},
  };
  for (const Row& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.g);
    CHECK(p_md_analytic({r.n, r.p_fa, r.g}) == doctest::Approx(r.ref).epsilon(1e-6));
    CHECK(oracle::p_md_simpson(r.n, r.p_fa, r.g) == doctest::Approx(r.ref).epsilon(1e-6));
  }
}

TEST_CASE("missed detection integral against the simulated detector") {
  const DetectorSpec spec{100, 0.1, 10.0};
  const EnergyDetector det(spec, DetectorModel::GaussianApprox);
  RngStream rng(77);
  const int trials = 1'000'000;
  int missed = 0;
  for (int i = 0; i < trials; ++i) missed += det.sense(rng, true, rng.exponential(10.0)).missed;
  CHECK(std::fabs(missed / double(trials) - p_md_analytic(spec)) <= 0.01);
  CHECK(std::fabs(oracle::p_md_mc(100, 0.1, 10.0, trials, 78) - p_md_analytic(spec)) <= 0.01);
}

TEST_CASE("false-alarm calibration") {
  for (auto model : {DetectorModel::GaussianApprox, DetectorModel::ExactEnergy}) {
    for (int n : {1, 20}) {
      const DetectorSpec spec{n, 0.1, 5.0};
      RngStream rng(3 + n);
      const int trials = 1'000'000;
      int alarms = 0, detected_idle = 0;
      for (int i = 0; i < trials; ++i) {
        const DetectionResult r = simulate_detection(rng, false, 0.0, spec, model);
        alarms += r.false_alarm;
        detected_idle += r.detected;
        REQUIRE_FALSE(r.missed);
      }
      CHECK(alarms == detected_idle);
      CHECK(std::fabs(alarms / double(trials) - 0.1) <= 3.0 * oracle::binomial_se(0.1, trials));
    }
  }
}

TEST_CASE("infinite SNR is never missed") {
  RngStream rng(9);
  // The Gaussian statistic dips below zero with probability Phi(-sqrt(N)),
  // which is negligible at N = 100; the exact statistic is never negative.
  const DetectorSpec gauss{100, 0.1, 1.0};
  const DetectorSpec exact{10, 0.1, 1.0};
  for (int i = 0; i < 10000; ++i) {
    const DetectionResult a = simulate_detection(rng, true, 1e12, gauss);
    const DetectionResult b = simulate_detection(rng, true, 1e12, exact, DetectorModel::ExactEnergy);
    REQUIRE(a.detected);
    REQUIRE_FALSE(a.missed);
    REQUIRE_FALSE(a.false_alarm);
    REQUIRE(b.detected);
  }
  // For small N the analytic miss probability keeps the same floor.
  CHECK(p_md_analytic({10, 0.1, 1e6}) == doctest::Approx(oracle::phi(-std::sqrt(10.0))).epsilon(0.05));
}

TEST_CASE("threshold placement") {
  const DetectorSpec spec{100, 0.1, 1.0};
  CHECK(detection_threshold(spec, DetectorModel::GaussianApprox) ==
        doctest::Approx(1.0 + oracle::upper_quantile(0.1) / 10.0).epsilon(1e-12));
  // The exact chi-square threshold approaches the Gaussian one for large N.
  const DetectorSpec big{100000, 0.1, 1.0};
  CHECK(detection_threshold(big, DetectorModel::ExactEnergy) ==
        doctest::Approx(detection_threshold(big, DetectorModel::GaussianApprox)).epsilon(1e-4));
}
