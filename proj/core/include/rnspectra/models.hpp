#pragma once

#include <vector>

#include "rnspectra/timeserie.hpp"

namespace rnspectra {

enum class StageKind { LinearDecay, ExponentialDecay };

/// Deterministic multi-stage signal description: one rate (slope or
/// exponent) and one duration per stage, sampled every `step` time units.
/// step <= 0 selects the default of min(lengths)/500.
struct StageSpec {
  std::vector<double> rates;
  std::vector<double> lengths;
  double step = 0.0;
  StageKind kind = StageKind::LinearDecay;

  void validate() const;
  double effective_step() const;
};

/// Piecewise-linear decay, f(0) = 1, continuous at breakpoints.
Timeserie gen_two_stage(const StageSpec& spec);

/// Piecewise-exponential decay, f(0) = 1; d(ln f)/dx equals the stage rate
/// inside each stage.
Timeserie gen_multistage_exp(const StageSpec& spec);

/// M uniform samples of 1/(1 + 25 x^2) on [-1, 1].
Timeserie gen_runge(int samples);

}  // namespace rnspectra
