#include "jamsec/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "jamsec/params.hpp"

namespace jamsec {
namespace {

constexpr double kTailCut = 1e-12;
constexpr double kQuadAbsTol = 1e-6;

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double q_inverse(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("q_inverse: p must be in (0,1), got " + std::to_string(p));
  }
  return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

int sample_count(double sensing_time, double bandwidth, SampleCountRule rule) {
  const double n = rule == SampleCountRule::Nyquist ? bandwidth * sensing_time
                                                    : sensing_time / bandwidth;
  const double rounded = std::round(n);
  if (!(rounded >= 1.0)) {
    throw ConfigError("sensing window holds " + std::to_string(n) +
                      " samples; at least one is required");
  }
  if (rounded > 1e9) throw ConfigError("sensing sample count too large");
  return static_cast<int>(rounded);
}

void DetectorSpec::validate() const {
  if (n_samples < 1) throw ConfigError("detector needs N >= 1");
  if (!(false_alarm_prob > 0.0 && false_alarm_prob < 1.0)) {
    throw ConfigError("P_FA must be in (0,1)");
  }
  if (!(gamma_tilde_a > 0.0) || !std::isfinite(gamma_tilde_a)) {
    throw ConfigError("mean SNR at Eve must be > 0");
  }
}

double detection_threshold(const DetectorSpec& spec, DetectorModel model) {
  spec.validate();
  const double n = spec.n_samples;
  if (model == DetectorModel::GaussianApprox) {
    return 1.0 + q_inverse(spec.false_alarm_prob) / std::sqrt(n);
  }
  // Upper tail of Gamma(N, 1/N) equal to P_FA.
  return boost::math::gamma_q_inv(n, spec.false_alarm_prob) / n;
}

double p_md_analytic(const DetectorSpec& spec) {
  spec.validate();
  const double sqrt_n = std::sqrt(static_cast<double>(spec.n_samples));
  const double level = q_inverse(spec.false_alarm_prob) / sqrt_n + 1.0;
  const double g = spec.gamma_tilde_a;

  // Weight normalised at Z = 1 so exp(1/g) never overflows.
  auto integrand = [&](double z) {
    return q_function(sqrt_n * (level / z - 1.0)) * std::exp(-(z - 1.0) / g);
  };

  const double z_max = 1.0 + g * std::log(1.0 / kTailCut);
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  constexpr unsigned max_depth = 30;
  constexpr double rel_tol = 1e-10;

  // The integrand steps near Z = level; split there when it is inside.
  double total = 0.0;
  double err_total = 0.0;
  auto integrate = [&](double a, double b) {
    double err = 0.0;
    total += Kronrod::integrate(integrand, a, b, max_depth, rel_tol, &err);
    err_total += err;
  };
  if (level > 1.0 && level < z_max) {
    integrate(1.0, level);
    integrate(level, z_max);
  } else {
    integrate(1.0, z_max);
  }

  const double detect = total / g;
  if (!std::isfinite(detect) || err_total / g > kQuadAbsTol) {
    throw QuadratureError("p_md_analytic: quadrature error " + std::to_string(err_total / g) +
                          " exceeds tolerance");
  }
  return std::clamp(1.0 - detect, 0.0, 1.0);
}

EnergyDetector::EnergyDetector(const DetectorSpec& spec, DetectorModel model)
    : spec_(spec), model_(model), threshold_(detection_threshold(spec, model)) {}

double EnergyDetector::draw_noise(RngStream& rng) const {
  const double n = spec_.n_samples;
  if (model_ == DetectorModel::GaussianApprox) return 1.0 + rng.normal() / std::sqrt(n);
  return rng.gamma(n) / n;
}

DetectionResult EnergyDetector::decide(double noise, bool alice_active, double snr) const {
  const double statistic = (alice_active ? 1.0 + snr : 1.0) * noise;
  DetectionResult r;
  r.detected = statistic > threshold_;
  r.missed = alice_active && !r.detected;
  r.false_alarm = !alice_active && r.detected;
  return r;
}

DetectionResult simulate_detection(RngStream& rng, bool alice_active, double snr,
                                   const DetectorSpec& spec, DetectorModel model) {
  return EnergyDetector(spec, model).sense(rng, alice_active, snr);
}

}  // namespace jamsec
