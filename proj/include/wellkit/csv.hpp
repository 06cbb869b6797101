#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellkit/types.hpp"

namespace wellkit {

/// Row-level accounting for a parse. Rows with an unparseable, missing,
/// non-finite, sentinel, or out-of-domain field are dropped and counted;
/// structural problems (schema, duplicates) throw instead.
struct ParseReport {
  std::size_t accepted = 0;
  std::size_t dropped = 0;
  std::vector<std::string> notes;

  void merge(const ParseReport& other);
};

struct CsvOptions {
  double sentinel = -999.25;
};

struct ParseResult {
  Dataset dataset;
  ParseReport report;
};

/// Parses the tabular well-log format: a header row naming at least
/// Well, Depth, RHOB, DT, GR, NPHI, Latitude, Longitude (any order, any
/// case, extra columns ignored), then one record per line. Records are
/// grouped by well and sorted by depth.
ParseResult parse_csv(std::istream& in, const CsvOptions& options = {});
ParseResult parse_csv_file(const std::filesystem::path& path, const CsvOptions& options = {});

void write_csv(const Dataset& dataset, std::ostream& out);
void write_csv_file(const Dataset& dataset, const std::filesystem::path& path);

void write_parse_report(const ParseReport& report, std::size_t well_count, std::ostream& out);

}  // namespace wellkit
