#include "wellkit/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "wellkit/errors.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

const VariableRange& range_for(const NormalizationManifest& m, Curve c) {
  const auto it = m.ranges.find(c);
  if (it == m.ranges.end()) {
    throw ParameterError(std::string("manifest has no range for variable: ") +
                         std::string(curve_name(c)));
  }
  return it->second;
}

std::uint64_t fnv1a(std::uint64_t hash, const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    hash ^= bytes[i];
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace

double NormalizationManifest::normalize(Curve c, double raw) const {
  const VariableRange& r = range_for(*this, c);
  return (raw - r.min) / (r.max - r.min);
}

double NormalizationManifest::denormalize(Curve c, double scaled) const {
  const VariableRange& r = range_for(*this, c);
  return scaled * (r.max - r.min) + r.min;
}

std::string dataset_fingerprint(const Dataset& dataset) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const WellLog& w : dataset.wells) {
    hash = fnv1a(hash, w.well_id.data(), w.well_id.size());
    hash = fnv1a(hash, "\n", 1);
    for (const LogRecord& r : w.records) {
      const double values[7] = {r.depth, r.rhob, r.dt, r.gr, r.nphi, r.latitude, r.longitude};
      hash = fnv1a(hash, values, sizeof(values));
    }
  }
  std::ostringstream os;
  os << std::hex << hash;
  return os.str();
}

NormalizationManifest fit_normalization(const Dataset& dataset, const FitOptions& options) {
  if (dataset.record_count() == 0) throw ParameterError("cannot fit normalization: empty dataset");

  NormalizationManifest manifest;
  for (Curve c : kNormalizedCurves) {
    VariableRange r{std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity()};
    for (const WellLog& w : dataset.wells) {
      for (const LogRecord& rec : w.records) {
        r.min = std::min(r.min, rec.field(c));
        r.max = std::max(r.max, rec.field(c));
      }
    }
    manifest.ranges[c] = r;
  }

  std::string degenerate;
  for (Curve c : kNormalizedCurves) {
    VariableRange& r = manifest.ranges[c];
    if (r.max > r.min) continue;
    const bool coordinate = c == Curve::Latitude || c == Curve::Longitude;
    if (coordinate && options.widen_constant_coordinates) {
      r.min -= 0.5;
      r.max += 0.5;
      continue;
    }
    if (!degenerate.empty()) degenerate += ", ";
    degenerate += curve_name(c);
  }
  if (!degenerate.empty()) {
    throw ParameterError("degenerate variable (constant across dataset): " + degenerate);
  }

  manifest.fingerprint = dataset_fingerprint(dataset);
  return manifest;
}

Dataset apply_normalization(const Dataset& dataset, const NormalizationManifest& manifest,
                            NormalizationMode mode, std::vector<std::string>* warnings) {
  Dataset out = dataset;
  for (WellLog& w : out.wells) {
    for (LogRecord& rec : w.records) {
      for (Curve c : kNormalizedCurves) {
        const VariableRange& r = range_for(manifest, c);
        double v = rec.field(c);
        if (v < r.min || v > r.max) {
          const std::string what = std::string(curve_name(c)) + "=" + format_double(v) +
                                   " outside manifest range [" + format_double(r.min) + ", " +
                                   format_double(r.max) + "] in well " + w.well_id;
          if (mode == NormalizationMode::Strict) {
            throw ParameterError("value out of range: " + what);
          }
          v = std::clamp(v, r.min, r.max);
          if (warnings) warnings->push_back("clamped " + what);
        }
        rec.field(c) = (v - r.min) / (r.max - r.min);
      }
    }
  }
  return out;
}

void write_manifest(const NormalizationManifest& manifest, std::ostream& out) {
  for (Curve c : kNormalizedCurves) {
    const VariableRange& r = range_for(manifest, c);
    out << curve_name(c) << ".min=" << format_double(r.min) << '\n';
    out << curve_name(c) << ".max=" << format_double(r.max) << '\n';
  }
  out << "fingerprint=" << manifest.fingerprint << '\n';
}

void write_manifest_file(const NormalizationManifest& manifest,
                         const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  write_manifest(manifest, out);
}

NormalizationManifest read_manifest(std::istream& in) {
  NormalizationManifest manifest;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("manifest: expected key=value, got '" + std::string(trimmed) + "'");
    }
    const std::string key{trim(trimmed.substr(0, eq))};
    const std::string value{trim(trimmed.substr(eq + 1))};
    if (key == "fingerprint") {
      manifest.fingerprint = value;
      continue;
    }
    const auto dot = key.rfind('.');
    if (dot == std::string::npos) throw FormatError("manifest: unknown key '" + key + "'");
    const auto curve = curve_from_name(key.substr(0, dot));
    const std::string field = key.substr(dot + 1);
    const auto parsed = try_parse_double(value);
    if (!curve || (field != "min" && field != "max") || !parsed) {
      throw FormatError("manifest: unknown key '" + key + "'");
    }
    if (field == "min") {
      manifest.ranges[*curve].min = *parsed;
    } else {
      manifest.ranges[*curve].max = *parsed;
    }
  }
  for (Curve c : kNormalizedCurves) {
    if (!manifest.ranges.contains(c)) {
      throw FormatError(std::string("manifest: missing range for ") + std::string(curve_name(c)));
    }
  }
  return manifest;
}

NormalizationManifest read_manifest_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  return read_manifest(in);
}

CanonicalDataset load_canonical(const std::filesystem::path& csv_path,
                                const std::filesystem::path& manifest_path) {
  CanonicalDataset out;
  ParseResult parsed = parse_csv_file(csv_path);
  out.dataset = std::move(parsed.dataset);
  out.report = std::move(parsed.report);
  out.manifest = read_manifest_file(manifest_path);
  for (WellLog& w : out.dataset.wells) {
    for (std::size_t i = 0; i < w.records.size(); ++i) {
      w.raw_depths[i] = out.manifest.denormalize(Curve::Depth, w.records[i].depth);
    }
  }
  return out;
}

}  // namespace wellkit
