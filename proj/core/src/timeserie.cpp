#include "rnspectra/timeserie.hpp"

#include <cmath>
#include <string>

#include "rnspectra/errors.hpp"

namespace rnspectra {

void Timeserie::validate() const {
  if (xs.size() != fs.size()) throw InputError("timeserie x/f lengths differ");
  if (xs.size() < 2) throw InputError("timeserie needs at least 2 observations");
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(fs[i]))
      throw InputError("timeserie has a non-finite entry at row " + std::to_string(i + 1));
    if (i > 0 && xs[i] < xs[i - 1])
      throw InputError("timeserie x values decrease at row " + std::to_string(i + 1));
  }
  if (xs.back() <= xs.front()) throw InputError("timeserie spans a zero-length x interval");
}

Timeserie log_transform(const Timeserie& ts) {
  Timeserie out;
  out.xs = ts.xs;
  out.fs.reserve(ts.fs.size());
  for (size_t i = 0; i < ts.fs.size(); ++i) {
    if (!(ts.fs[i] > 0.0))
      throw InputError("log transform requires f > 0, violated at row " + std::to_string(i + 1));
    out.fs.push_back(std::log(ts.fs[i]));
  }
  return out;
}

}  // namespace rnspectra
