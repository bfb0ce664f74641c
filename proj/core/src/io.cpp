#include "rnspectra/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "rnspectra/errors.hpp"

namespace rnspectra {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::string_view source, size_t line_no) {
  const std::string_view f = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc{} || ptr != f.data() + f.size())
    throw InputError(std::string(source) + ":" + std::to_string(line_no) +
                     ": malformed numeric field '" + std::string(field) + "'");
  return v;
}

}  // namespace

Timeserie parse_timeserie(std::istream& in, std::string_view source_name) {
  Timeserie ts;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || trim(line).empty()) continue;
    if (line.front() == '|') continue;

    const std::string_view sv = line;
    const size_t tab1 = sv.find('\t');
    if (tab1 == std::string_view::npos)
      throw InputError(std::string(source_name) + ":" + std::to_string(line_no) +
                       ": expected two tab-separated columns");
    size_t tab2 = sv.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) tab2 = sv.size();

    const double x = parse_field(sv.substr(0, tab1), source_name, line_no);
    const double f = parse_field(sv.substr(tab1 + 1, tab2 - tab1 - 1), source_name, line_no);
    if (!ts.xs.empty() && x < ts.xs.back())
      throw InputError(std::string(source_name) + ":" + std::to_string(line_no) +
                       ": x values must be nondecreasing");
    ts.xs.push_back(x);
    ts.fs.push_back(f);
  }
  if (ts.size() < 2)
    throw InputError(std::string(source_name) + ": insufficient data, need at least 2 rows");
  return ts;
}

Timeserie parse_timeserie(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path.string());
  return parse_timeserie(in, path.string());
}

void write_timeserie(std::ostream& out, const Timeserie& ts, std::string_view header) {
  if (!header.empty()) out << "| " << header << "\n";
  for (size_t i = 0; i < ts.size(); ++i)
    out << format_g17(ts.xs[i]) << '\t' << format_g17(ts.fs[i]) << '\n';
}

void write_timeserie(const std::filesystem::path& path, const Timeserie& ts,
                     std::string_view header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + path.string());
  write_timeserie(out, ts, header);
  if (!out) throw InputError("failed writing output file: " + path.string());
}

std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace rnspectra
