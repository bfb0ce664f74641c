#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rnspectra/timeserie.hpp"

namespace rnspectra {

/// Read a two-column tab-separated timeserie. Lines starting with '|' are
/// comments; blank lines are skipped; extra columns are ignored.
Timeserie parse_timeserie(const std::filesystem::path& path);
Timeserie parse_timeserie(std::istream& in, std::string_view source_name = "<stream>");

/// Write in the same format, `header` (without the leading '|') as comment.
void write_timeserie(std::ostream& out, const Timeserie& ts, std::string_view header);
void write_timeserie(const std::filesystem::path& path, const Timeserie& ts,
                     std::string_view header);

/// Fixed 17-significant-digit rendering used for every output file, so
/// identical runs produce byte-identical files. NaN renders as "nan".
std::string format_g17(double v);

}  // namespace rnspectra
