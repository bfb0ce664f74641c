#pragma once

#include <cstddef>
#include <vector>

namespace rnspectra {

/// Ordered sample pairs (x_l, f_l); x nondecreasing. The sole experimental input.
struct Timeserie {
  std::vector<double> xs;
  std::vector<double> fs;

  size_t size() const { return xs.size(); }

  /// Throws InputError unless sizes match, M >= 2, all entries finite and
  /// xs is nondecreasing.
  void validate() const;
};

/// (x, f) -> (x, ln f). Throws InputError when any f <= 0. Feeding the result
/// through the derivative matrix pair yields the distribution of d(ln f)/dx,
/// i.e. the relaxation-rate spectrum in its second form.
Timeserie log_transform(const Timeserie& ts);

}  // namespace rnspectra
