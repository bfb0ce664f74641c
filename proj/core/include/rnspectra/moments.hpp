#pragma once

#include <vector>

#include "rnspectra/basis.hpp"
#include "rnspectra/matrix.hpp"
#include "rnspectra/timeserie.hpp"

namespace rnspectra {

/// How the pure-measure moments <Q_k> are obtained: from the sample sum or
/// from the closed-form integral over [x_1, x_M]. <f Q_k> and <df/dx Q_k>
/// always use the sample sums.
enum class DxMode { SampleDX, AnalyticalDX };

const char* to_string(DxMode mode);

/// Moment vectors of the sample measure, all of length 2n (indices 0..2n-1;
/// the matrix lift consumes indices up to 2n-2, the position lift one more).
struct MomentSet {
  BasisSpec spec;
  DxMode dx_mode = DxMode::SampleDX;
  std::vector<double> q;            // <Q_k>
  std::vector<double> fq;           // <f Q_k>
  std::vector<double> dfq;          // <df/dx Q_k>, direct difference sums
  std::vector<double> dfq_byparts;  // <df/dx Q_k> via integration by parts of <f Q_k>
};

MomentSet compute_moments(const Timeserie& ts, const BasisSpec& spec, DxMode dx_mode);

/// Relative gap between the direct and by-parts derivative moments over the
/// first n entries; large values flag boundary/sampling trouble worth surfacing.
double byparts_discrepancy(const MomentSet& ms, int n);

enum class MomentKind { Q, FQ, DFQ, DFQByParts, XQ };

/// Lift a moment vector to the n x n matrix <Q_j g Q_k> through the basis
/// product expansion; symmetric by construction. XQ synthesizes <x Q_l>
/// from q using x = center + half_width * Q_1 before lifting.
Matrix build_matrix(const MomentSet& ms, MomentKind kind, int n);

enum class PairLabel { Value, Derivative, DerivativeByParts, RelaxRate, Position };

const char* to_string(PairLabel label);

/// The matrix pencil (mL, mR) whose generalized spectrum distributes the
/// dynamic characteristic selected by `label`.
struct OperatorPair {
  Matrix mL;
  Matrix mR;
  PairLabel label = PairLabel::Value;
};

OperatorPair make_operator_pair(const MomentSet& ms, PairLabel label, int n);

}  // namespace rnspectra
