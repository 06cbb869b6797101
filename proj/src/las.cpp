#include "wellkit/las.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wellkit/errors.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

// MNEM.UNIT   DATA : DESCRIPTION
struct LasLine {
  std::string mnemonic;
  std::string data;
};

std::optional<LasLine> parse_las_line(std::string_view line) {
  const auto dot = line.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  LasLine out;
  out.mnemonic = to_lower(trim(line.substr(0, dot)));
  std::string_view rest = line.substr(dot + 1);
  // unit runs to the first blank after the dot
  std::size_t unit_end = 0;
  while (unit_end < rest.size() && rest[unit_end] != ' ' && rest[unit_end] != '\t') ++unit_end;
  rest = rest.substr(unit_end);
  const auto colon = rest.rfind(':');
  if (colon != std::string_view::npos) rest = rest.substr(0, colon);
  out.data = std::string(trim(rest));
  return out;
}

/// Curves we know how to map; everything else is carried as an ignored column.
std::optional<Curve> las_curve(std::string_view mnemonic) {
  const std::string m = to_lower(trim(mnemonic));
  if (m == "dept" || m == "depth") return Curve::Depth;
  if (m == "rhob") return Curve::Rhob;
  if (m == "dt") return Curve::Dt;
  if (m == "gr") return Curve::Gr;
  if (m == "nphi") return Curve::Nphi;
  return std::nullopt;
}

}  // namespace

WellLog parse_las(std::istream& in, const LasOptions& options, ParseReport* report) {
  double null_value = options.null_value;
  std::string well_id;
  double latitude = 0.0;
  double longitude = 0.0;
  std::vector<std::optional<Curve>> columns;  // by ~C order

  enum class Section { None, Version, Well, Curves, Other, Data };
  Section section = Section::None;
  bool saw_data_section = false;

  std::vector<LogRecord> records;
  ParseReport local;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    if (trimmed.front() == '~') {
      if (saw_data_section) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": section after ~ASCII data is not supported");
      }
      const char tag = trimmed.size() > 1 ? static_cast<char>(std::toupper(trimmed[1])) : '\0';
      switch (tag) {
        case 'V': section = Section::Version; break;
        case 'W': section = Section::Well; break;
        case 'C': section = Section::Curves; break;
        case 'A':
          section = Section::Data;
          saw_data_section = true;
          break;
        default: section = Section::Other; break;
      }
      continue;
    }

    if (section == Section::Version) {
      const auto parsed = parse_las_line(trimmed);
      if (parsed && parsed->mnemonic == "wrap" && to_lower(parsed->data) == "yes") {
        throw FormatError("wrapped LAS data (WRAP=YES) is not supported");
      }
      continue;
    }

    if (section == Section::Well) {
      const auto parsed = parse_las_line(trimmed);
      if (!parsed) continue;
      if (parsed->mnemonic == "well") {
        well_id = parsed->data;
      } else if (parsed->mnemonic == "null") {
        if (const auto v = try_parse_double(parsed->data)) null_value = *v;
      } else if (parsed->mnemonic == "lati" || parsed->mnemonic == "lat") {
        if (const auto v = try_parse_double(parsed->data)) latitude = *v;
      } else if (parsed->mnemonic == "long" || parsed->mnemonic == "lon") {
        if (const auto v = try_parse_double(parsed->data)) longitude = *v;
      }
      continue;
    }

    if (section == Section::Curves) {
      const auto parsed = parse_las_line(trimmed);
      if (!parsed) {
        throw FormatError("line " + std::to_string(line_no) + ": malformed curve entry");
      }
      columns.push_back(las_curve(parsed->mnemonic));
      continue;
    }

    if (section == Section::Data) {
      if (columns.empty()) throw FormatError("~ASCII data before ~Curve section");
      const auto tokens = split_whitespace(trimmed);
      if (tokens.size() != columns.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(columns.size()) + " values, got " +
                          std::to_string(tokens.size()));
      }
      LogRecord rec;
      rec.latitude = latitude;
      rec.longitude = longitude;
      bool have[5] = {false, false, false, false, false};  // depth, rhob, dt, gr, nphi
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto value = try_parse_double(tokens[i]);
        if (!value) {
          throw FormatError("line " + std::to_string(line_no) + ": unparseable value '" +
                            std::string(tokens[i]) + "'");
        }
        if (!columns[i]) continue;
        if (*value == null_value || !std::isfinite(*value)) continue;
        rec.field(*columns[i]) = *value;
        switch (*columns[i]) {
          case Curve::Depth: have[0] = true; break;
          case Curve::Rhob: have[1] = true; break;
          case Curve::Dt: have[2] = true; break;
          case Curve::Gr: have[3] = true; break;
          case Curve::Nphi: have[4] = true; break;
          default: break;
        }
      }
      const bool complete = have[0] && have[1] && have[2] && have[3] && have[4];
      if (!complete) {
        ++local.dropped;
        local.notes.push_back("line " + std::to_string(line_no) + ": incomplete record");
        continue;
      }
      if (rec.depth <= 0.0) {
        ++local.dropped;
        local.notes.push_back("line " + std::to_string(line_no) + ": non-positive depth");
        continue;
      }
      if (rec.nphi < 0.0 || rec.nphi > 1.0) {
        ++local.dropped;
        local.notes.push_back("line " + std::to_string(line_no) + ": NPHI outside [0, 1]");
        continue;
      }
      records.push_back(rec);
      ++local.accepted;
      continue;
    }
  }

  if (!saw_data_section) throw FormatError("missing ~ASCII data section");
  if (well_id.empty()) throw FormatError("missing WELL mnemonic in ~Well section");
  if (records.empty()) {
    throw FormatError("no complete records in well " + well_id);
  }

  std::sort(records.begin(), records.end(),
            [](const LogRecord& a, const LogRecord& b) { return a.depth < b.depth; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].depth == records[i - 1].depth) {
      throw SchemaError("duplicate record: well " + well_id + " depth " +
                        format_double(records[i].depth));
    }
  }

  WellLog log;
  log.well_id = well_id;
  log.raw_depths.reserve(records.size());
  for (const LogRecord& r : records) log.raw_depths.push_back(r.depth);
  log.records = std::move(records);
  if (report) report->merge(local);
  return log;
}

WellLog parse_las_file(const std::filesystem::path& path, const LasOptions& options,
                       ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  return parse_las(in, options, report);
}

}  // namespace wellkit
