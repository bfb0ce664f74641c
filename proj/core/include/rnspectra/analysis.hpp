#pragma once

#include <filesystem>
#include <vector>

#include "rnspectra/linalg.hpp"
#include "rnspectra/moments.hpp"
#include "rnspectra/spectral.hpp"
#include "rnspectra/timeserie.hpp"

namespace rnspectra {

struct RunConfig {
  std::filesystem::path input_path;
  int n = 50;
  DxMode dx_mode = DxMode::SampleDX;
  BasisFamily basis = BasisFamily::Chebyshev;
  std::filesystem::path output_dir = ".";
};

/// One evaluation point of both interpolation routes for f and df/dx.
struct InterpolationRow {
  double x = 0.0;
  double f_rn = 0.0;
  double f_ls = 0.0;
  double df_rn = 0.0;
  double df_ls = 0.0;
  double df_rn_byparts = 0.0;
  double df_ls_byparts = 0.0;
};

struct SpectrumReport {
  Spectrum spectrum;
  std::vector<double> x_est;  // per state, Eq-of-motion estimate of the location
};

struct AnalysisResult {
  BasisSpec spec;
  MomentSet moments;
  Matrix gram, value_matrix, deriv_matrix, deriv_byparts_matrix, position_matrix;
  SpectrumReport value, deriv, deriv_byparts, relax;
  std::vector<InterpolationRow> rows_direct;  // quadratic-form route
  std::vector<InterpolationRow> rows_eigen;   // eigenbasis route
};

/// Full analysis of a timeserie: moments, the four matrix pencils, their
/// spectra, and both interpolation routes evaluated at the sample points.
AnalysisResult analyze(const Timeserie& ts, int n, DxMode dx_mode,
                       BasisFamily basis = BasisFamily::Chebyshev);

/// Parse cfg.input_path, run `analyze` and write the six output files
/// (RN_interpolated.dat, EV_RN_interpolated.dat and the four *_spectrum.dat)
/// into cfg.output_dir. Returns the in-memory result for callers that want
/// to inspect it (e.g. the direct/by-parts moment gap).
AnalysisResult run_analysis(const RunConfig& cfg);

/// File names produced by run_analysis, in output order.
const std::vector<std::string>& output_file_names();

}  // namespace rnspectra
