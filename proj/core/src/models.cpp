#include "rnspectra/models.hpp"

#include <algorithm>
#include <cmath>

#include "rnspectra/errors.hpp"

namespace rnspectra {

void StageSpec::validate() const {
  if (rates.empty() || rates.size() != lengths.size())
    throw InputError("stage spec needs matching, nonempty rates and lengths");
  for (double len : lengths)
    if (!(len > 0.0)) throw InputError("stage lengths must be positive");
  for (double r : rates)
    if (!std::isfinite(r)) throw InputError("stage rates must be finite");
  if (step > 0.0 && !std::isfinite(step)) throw InputError("step must be finite");
}

double StageSpec::effective_step() const {
  if (step > 0.0) return step;
  return *std::min_element(lengths.begin(), lengths.end()) / 500.0;
}

namespace {

Timeserie sample_stages(const StageSpec& spec) {
  spec.validate();
  const double h = spec.effective_step();
  double total = 0.0;
  for (double len : spec.lengths) total += len;

  // Stage boundaries and the exact f value at each boundary, f(0) = 1.
  const size_t stages = spec.lengths.size();
  std::vector<double> bound(stages + 1, 0.0);
  std::vector<double> f_at(stages + 1, 1.0);
  for (size_t j = 0; j < stages; ++j) {
    bound[j + 1] = bound[j] + spec.lengths[j];
    f_at[j + 1] = spec.kind == StageKind::LinearDecay
                      ? f_at[j] + spec.rates[j] * spec.lengths[j]
                      : f_at[j] * std::exp(spec.rates[j] * spec.lengths[j]);
  }

  const long long count = std::llround(total / h);
  Timeserie ts;
  ts.xs.reserve(count + 1);
  ts.fs.reserve(count + 1);
  size_t j = 0;
  for (long long i = 0; i <= count; ++i) {
    const double x = i * h;
    while (j + 1 < stages && x > bound[j + 1]) ++j;
    const double local = x - bound[j];
    const double f = spec.kind == StageKind::LinearDecay
                         ? f_at[j] + spec.rates[j] * local
                         : f_at[j] * std::exp(spec.rates[j] * local);
    ts.xs.push_back(x);
    ts.fs.push_back(f);
  }
  return ts;
}

}  // namespace

Timeserie gen_two_stage(const StageSpec& spec) {
  if (spec.kind != StageKind::LinearDecay)
    throw InputError("gen_two_stage expects LinearDecay stages");
  return sample_stages(spec);
}

Timeserie gen_multistage_exp(const StageSpec& spec) {
  if (spec.kind != StageKind::ExponentialDecay)
    throw InputError("gen_multistage_exp expects ExponentialDecay stages");
  return sample_stages(spec);
}

Timeserie gen_runge(int samples) {
  if (samples < 2) throw InputError("runge generator needs at least 2 samples");
  Timeserie ts;
  ts.xs.reserve(samples);
  ts.fs.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = -1.0 + 2.0 * i / (samples - 1);
    ts.xs.push_back(x);
    ts.fs.push_back(1.0 / (1.0 + 25.0 * x * x));
  }
  return ts;
}

}  // namespace rnspectra
