#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wellkit/csv.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

struct VariableRange {
  double min = 0.0;
  double max = 1.0;

  bool operator==(const VariableRange&) const = default;
};

/// Variables rescaled to [0,1]; nphi is excluded by contract (it is already
/// a fraction and is the prediction target).
inline constexpr std::array<Curve, 6> kNormalizedCurves = {
    Curve::Depth, Curve::Rhob, Curve::Dt, Curve::Gr, Curve::Latitude, Curve::Longitude,
};

/// Global per-variable min/max over a dataset, plus a fingerprint of the
/// dataset the ranges were fitted on.
struct NormalizationManifest {
  std::map<Curve, VariableRange> ranges;
  std::string fingerprint;

  double normalize(Curve c, double raw) const;
  double denormalize(Curve c, double scaled) const;

  bool operator==(const NormalizationManifest&) const = default;
};

enum class NormalizationMode { Strict, Lenient };

/// FNV-1a over well ids and record bit patterns.
std::string dataset_fingerprint(const Dataset& dataset);

struct FitOptions {
  /// Single-well corpora have constant coordinates; with this set the
  /// latitude/longitude ranges widen by +-0.5 around the constant instead
  /// of failing. Constant sensor curves are always an error.
  bool widen_constant_coordinates = false;
};

NormalizationManifest fit_normalization(const Dataset& dataset, const FitOptions& options = {});

/// Rescales every normalized variable with the manifest ranges. In strict
/// mode a value outside its fitted range is an error; in lenient mode it is
/// clamped and a warning is appended. raw_depths pass through untouched.
Dataset apply_normalization(const Dataset& dataset, const NormalizationManifest& manifest,
                            NormalizationMode mode = NormalizationMode::Strict,
                            std::vector<std::string>* warnings = nullptr);

void write_manifest(const NormalizationManifest& manifest, std::ostream& out);
void write_manifest_file(const NormalizationManifest& manifest, const std::filesystem::path& path);
NormalizationManifest read_manifest(std::istream& in);
NormalizationManifest read_manifest_file(const std::filesystem::path& path);

struct CanonicalDataset {
  Dataset dataset;
  NormalizationManifest manifest;
  ParseReport report;
};

/// Loads a persisted canonical dataset (normalized CSV + manifest) and
/// reconstructs raw depths from the manifest's depth range.
CanonicalDataset load_canonical(const std::filesystem::path& csv_path,
                                const std::filesystem::path& manifest_path);

}  // namespace wellkit
