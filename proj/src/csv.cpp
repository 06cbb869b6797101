#include "wellkit/csv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "wellkit/errors.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

constexpr std::array<Curve, 7> kCsvCurves = {
    Curve::Depth, Curve::Rhob,     Curve::Dt,       Curve::Gr,
    Curve::Nphi,  Curve::Latitude, Curve::Longitude,
};

std::string_view csv_column_name(Curve c) {
  switch (c) {
    case Curve::Depth: return "Depth";
    case Curve::Rhob: return "RHOB";
    case Curve::Dt: return "DT";
    case Curve::Gr: return "GR";
    case Curve::Nphi: return "NPHI";
    case Curve::Latitude: return "Latitude";
    case Curve::Longitude: return "Longitude";
  }
  return "?";
}

struct HeaderMap {
  std::size_t well = SIZE_MAX;
  std::array<std::size_t, 7> curve_column{};  // indexed by Curve
};

HeaderMap parse_header(std::string_view line) {
  HeaderMap map;
  map.curve_column.fill(SIZE_MAX);
  const auto fields = split(line, ',');
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string name = to_lower(trim(fields[i]));
    if (name == "well") {
      map.well = i;
      continue;
    }
    for (Curve c : kCsvCurves) {
      if (name == to_lower(csv_column_name(c))) {
        map.curve_column[static_cast<std::size_t>(c)] = i;
      }
    }
  }
  std::string missing;
  if (map.well == SIZE_MAX) missing = "Well";
  for (Curve c : kCsvCurves) {
    if (map.curve_column[static_cast<std::size_t>(c)] == SIZE_MAX) {
      if (!missing.empty()) missing += ", ";
      missing += csv_column_name(c);
    }
  }
  if (!missing.empty()) {
    throw SchemaError("missing required column: " + missing);
  }
  return map;
}

bool usable_value(double v, double sentinel) {
  return std::isfinite(v) && v != sentinel;
}

}  // namespace

void ParseReport::merge(const ParseReport& other) {
  accepted += other.accepted;
  dropped += other.dropped;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

ParseResult parse_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  // header: first non-blank line
  bool have_header = false;
  HeaderMap header;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    header = parse_header(line);
    have_header = true;
    break;
  }
  if (!have_header) throw SchemaError("empty input: no header row");

  ParseResult result;
  std::map<std::string, std::vector<LogRecord>> by_well;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');

    const auto drop = [&](const std::string& why) {
      ++result.report.dropped;
      result.report.notes.push_back("line " + std::to_string(line_no) + ": " + why);
    };

    std::size_t max_needed = header.well;
    for (Curve c : kCsvCurves) {
      max_needed = std::max(max_needed, header.curve_column[static_cast<std::size_t>(c)]);
    }
    if (fields.size() <= max_needed) {
      drop("too few fields");
      continue;
    }

    const std::string well_id{trim(fields[header.well])};
    if (well_id.empty()) {
      drop("empty well id");
      continue;
    }

    LogRecord rec;
    bool ok = true;
    for (Curve c : kCsvCurves) {
      const auto raw = fields[header.curve_column[static_cast<std::size_t>(c)]];
      const auto value = try_parse_double(raw);
      if (!value) {
        drop(std::string("unparseable ") + std::string(csv_column_name(c)));
        ok = false;
        break;
      }
      if (!usable_value(*value, options.sentinel)) {
        drop(std::string("sentinel or non-finite ") + std::string(csv_column_name(c)));
        ok = false;
        break;
      }
      rec.field(c) = *value;
    }
    if (!ok) continue;

    if (rec.depth < 0.0) {
      drop("negative depth");
      continue;
    }
    if (rec.nphi < 0.0 || rec.nphi > 1.0) {
      drop("NPHI outside [0, 1]");
      continue;
    }

    by_well[well_id].push_back(rec);
    ++result.report.accepted;
  }

  for (auto& [well_id, records] : by_well) {
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
    result.dataset.wells.push_back(std::move(log));
  }
  // std::map iteration already yields wells sorted by id
  return result;
}

ParseResult parse_csv_file(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  return parse_csv(in, options);
}

void write_csv(const Dataset& dataset, std::ostream& out) {
  out << "Well,Depth,RHOB,DT,GR,NPHI,Latitude,Longitude\n";
  for (const WellLog& w : dataset.wells) {
    for (const LogRecord& r : w.records) {
      out << w.well_id << ',' << format_double(r.depth) << ',' << format_double(r.rhob) << ','
          << format_double(r.dt) << ',' << format_double(r.gr) << ',' << format_double(r.nphi)
          << ',' << format_double(r.latitude) << ',' << format_double(r.longitude) << '\n';
    }
  }
}

void write_csv_file(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  write_csv(dataset, out);
}

void write_parse_report(const ParseReport& report, std::size_t well_count, std::ostream& out) {
  out << "accepted=" << report.accepted << '\n';
  out << "dropped=" << report.dropped << '\n';
  out << "wells=" << well_count << '\n';
  for (const std::string& note : report.notes) {
    out << "drop: " << note << '\n';
  }
}

}  // namespace wellkit
