#pragma once

// Eve's energy detector: threshold calibration from a target false-alarm
// probability, per-slot detection draws, and the Rayleigh-averaged
// missed-detection probability.

#include <stdexcept>

#include "jamsec/rng.hpp"

namespace jamsec {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gaussian tail Q(x) = Pr{N(0,1) > x}.
double q_function(double x);

// Throws std::domain_error unless p is in (0, 1).
double q_inverse(double p);

// How the sensing window maps to a sample count.
enum class SampleCountRule {
  Nyquist,           // N = round(W tau)
  InverseBandwidth,  // N = round(tau / W), the literal f_s = 1/W reading
};

// Throws ConfigError when the rule yields fewer than one sample.
int sample_count(double sensing_time, double bandwidth, SampleCountRule rule);

struct DetectorSpec {
  int n_samples = 1;
  double false_alarm_prob = 0.1;
  double gamma_tilde_a = 1.0;  // mean received SNR at Eve

  void validate() const;
};

enum class DetectorModel {
  // Averaged energy treated as Gaussian, the approximation behind
  // p_md_analytic. Under H0 it is 1 + W/sqrt(N); under H1 (1+s)(1 + W/sqrt(N)).
  GaussianApprox,
  // Averaged energy of N complex Gaussian samples: Gamma(N, (1+s)/N).
  ExactEnergy,
};

// Normalised decision threshold on the averaged energy (noise power = 1).
double detection_threshold(const DetectorSpec& spec, DetectorModel model);

// Rayleigh-averaged missed-detection probability:
//   1 - (1/g) int_1^inf Q(sqrt(N) ((Q^-1(P_FA)/sqrt(N) + 1)/Z - 1)) exp(-(Z-1)/g) dZ
// with g = gamma_tilde_a. Throws QuadratureError if the adaptive
// Gauss-Kronrod estimate misses 1e-6 absolute.
double p_md_analytic(const DetectorSpec& spec);

struct DetectionResult {
  bool detected = false;     // Eve declares Alice active
  bool missed = false;       // active, declared inactive
  bool false_alarm = false;  // inactive, declared active
};

// Detector with its threshold computed once.
class EnergyDetector {
 public:
  EnergyDetector(const DetectorSpec& spec, DetectorModel model);

  // Noise part of the averaged-energy statistic for one sensing window.
  // GaussianApprox consumes two uniforms; ExactEnergy a variable number.
  double draw_noise(RngStream& rng) const;

  // Decision for a given noise draw. `snr` is the received SNR at Eve,
  // gamma_a * g_ae; it is ignored when Alice is inactive.
  DetectionResult decide(double noise, bool alice_active, double snr) const;

  DetectionResult sense(RngStream& rng, bool alice_active, double snr) const {
    return decide(draw_noise(rng), alice_active, snr);
  }

  const DetectorSpec& spec() const { return spec_; }
  double threshold() const { return threshold_; }

 private:
  DetectorSpec spec_;
  DetectorModel model_;
  double threshold_;
};

DetectionResult simulate_detection(RngStream& rng, bool alice_active, double snr,
                                   const DetectorSpec& spec,
                                   DetectorModel model = DetectorModel::GaussianApprox);

}  // namespace jamsec
