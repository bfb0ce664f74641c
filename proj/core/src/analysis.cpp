#include "rnspectra/analysis.hpp"

#include <fstream>

#include "rnspectra/errors.hpp"
#include "rnspectra/io.hpp"

namespace rnspectra {

namespace {

SpectrumReport report_for(const OperatorPair& pair, std::span<const double> q,
                          const Matrix& x_matrix, const Matrix& gram) {
  SpectrumReport rep;
  rep.spectrum = solve_gep(pair);
  rep.x_est = lebesgue_quadrature(rep.spectrum, q, x_matrix, gram).x_estimates;
  return rep;
}

}  // namespace

AnalysisResult analyze(const Timeserie& ts, int n, DxMode dx_mode, BasisFamily basis) {
  ts.validate();
  AnalysisResult r;
  r.spec = make_basis(basis, n, ts.xs.front(), ts.xs.back());
  r.moments = compute_moments(ts, r.spec, dx_mode);

  r.gram = build_matrix(r.moments, MomentKind::Q, n);
  r.value_matrix = build_matrix(r.moments, MomentKind::FQ, n);
  r.deriv_matrix = build_matrix(r.moments, MomentKind::DFQ, n);
  r.deriv_byparts_matrix = build_matrix(r.moments, MomentKind::DFQByParts, n);
  r.position_matrix = build_matrix(r.moments, MomentKind::XQ, n);

  const GramSolver gram(r.gram);  // throws NumericError when not SPD

  const auto& q = r.moments.q;
  r.value = report_for({r.value_matrix, r.gram, PairLabel::Value}, q, r.position_matrix, r.gram);
  r.deriv =
      report_for({r.deriv_matrix, r.gram, PairLabel::Derivative}, q, r.position_matrix, r.gram);
  r.deriv_byparts = report_for({r.deriv_byparts_matrix, r.gram, PairLabel::DerivativeByParts}, q,
                               r.position_matrix, r.gram);
  r.relax = report_for({r.deriv_matrix, r.value_matrix, PairLabel::RelaxRate}, q,
                       r.position_matrix, r.gram);

  r.rows_direct.reserve(ts.size());
  r.rows_eigen.reserve(ts.size());
  const std::span<const double> fq(r.moments.fq.data(), static_cast<size_t>(n));
  const std::span<const double> dfq(r.moments.dfq.data(), static_cast<size_t>(n));
  const std::span<const double> dfqb(r.moments.dfq_byparts.data(), static_cast<size_t>(n));
  for (double x : ts.xs) {
    InterpolationRow d;
    d.x = x;
    d.f_rn = rn_interpolate(r.value_matrix, gram, r.spec, x);
    d.f_ls = ls_interpolate(fq, gram, r.spec, x);
    d.df_rn = rn_interpolate(r.deriv_matrix, gram, r.spec, x);
    d.df_ls = ls_interpolate(dfq, gram, r.spec, x);
    d.df_rn_byparts = rn_interpolate(r.deriv_byparts_matrix, gram, r.spec, x);
    d.df_ls_byparts = ls_interpolate(dfqb, gram, r.spec, x);
    r.rows_direct.push_back(d);

    InterpolationRow e;
    e.x = x;
    e.f_rn = spectrum_rn_interpolate(r.value.spectrum, r.spec, x);
    e.f_ls = spectrum_ls_interpolate(r.value.spectrum, q, r.spec, x);
    e.df_rn = spectrum_rn_interpolate(r.deriv.spectrum, r.spec, x);
    e.df_ls = spectrum_ls_interpolate(r.deriv.spectrum, q, r.spec, x);
    e.df_rn_byparts = spectrum_rn_interpolate(r.deriv_byparts.spectrum, r.spec, x);
    e.df_ls_byparts = spectrum_ls_interpolate(r.deriv_byparts.spectrum, q, r.spec, x);
    r.rows_eigen.push_back(e);
  }
  return r;
}

namespace {

void write_interpolated(const std::filesystem::path& path, const Timeserie& ts,
                        const std::vector<InterpolationRow>& rows, const std::string& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path.string());
  out << "| " << header << "\n";
  out << "| x\tf_orig\tf_RN\tf_LS\tdf_RN\tdf_LS\tdf_RN_byparts\tdf_LS_byparts\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << format_g17(r.x) << '\t' << format_g17(ts.fs[i]) << '\t' << format_g17(r.f_rn) << '\t'
        << format_g17(r.f_ls) << '\t' << format_g17(r.df_rn) << '\t' << format_g17(r.df_ls)
        << '\t' << format_g17(r.df_rn_byparts) << '\t' << format_g17(r.df_ls_byparts) << '\n';
  }
  if (!out) throw InputError("failed writing output file: " + path.string());
}

void write_spectrum(const std::filesystem::path& path, const SpectrumReport& rep,
                    const std::string& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path.string());
  out << "| " << header << "\n";
  out << "| i\tlambda\tx_est\n";
  for (int i = 0; i < rep.spectrum.n(); ++i)
    out << i << '\t' << format_g17(rep.spectrum.lambdas[i]) << '\t'
        << format_g17(rep.x_est[i]) << '\n';
  if (!out) throw InputError("failed writing output file: " + path.string());
}

}  // namespace

const std::vector<std::string>& output_file_names() {
  static const std::vector<std::string> names = {
      "RN_interpolated.dat",          "EV_RN_interpolated.dat",
      "QQf_QQ_spectrum.dat",          "QQdf_QQ_spectrum.dat",
      "QQdfbyparts_QQ_spectrum.dat",  "QQdf_QQf_spectrum.dat",
  };
  return names;
}

AnalysisResult run_analysis(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > BasisSpec::max_dimension())
    throw InputError("n must be between 1 and " + std::to_string(BasisSpec::max_dimension()));

  const Timeserie ts = parse_timeserie(cfg.input_path);
  AnalysisResult res = analyze(ts, cfg.n, cfg.dx_mode, cfg.basis);

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec && !std::filesystem::is_directory(cfg.output_dir))
    throw InputError("cannot create output directory: " + cfg.output_dir.string());

  const std::string header = "rn-spectra analyze input=" +
                             cfg.input_path.filename().string() +
                             " n=" + std::to_string(cfg.n) + " dx=" + to_string(cfg.dx_mode) +
                             " basis=" + to_string(cfg.basis);
  const auto& names = output_file_names();
  write_interpolated(cfg.output_dir / names[0], ts, res.rows_direct, header);
  write_interpolated(cfg.output_dir / names[1], ts, res.rows_eigen, header);
  write_spectrum(cfg.output_dir / names[2], res.value, header);
  write_spectrum(cfg.output_dir / names[3], res.deriv, header);
  write_spectrum(cfg.output_dir / names[4], res.deriv_byparts, header);
  write_spectrum(cfg.output_dir / names[5], res.relax, header);
  return res;
}

}  // namespace rnspectra
