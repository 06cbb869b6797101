#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wellkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Curves carried by every record. nphi is the prediction target and is
/// never rescaled; the others are normalization candidates.
enum class Curve : int {
  Depth = 0,
  Rhob,
  Dt,
  Gr,
  Nphi,
  Latitude,
  Longitude,
};

inline constexpr std::array<Curve, 7> kAllCurves = {
    Curve::Depth, Curve::Rhob,     Curve::Dt,       Curve::Gr,
    Curve::Nphi,  Curve::Latitude, Curve::Longitude,
};

std::string_view curve_name(Curve c);
std::optional<Curve> curve_from_name(std::string_view name);  // case-insensitive

/// One depth-aligned reading of all sensors for a well.
struct LogRecord {
  double depth = 0.0;
  double rhob = 0.0;
  double dt = 0.0;
  double gr = 0.0;
  double nphi = 0.0;
  double latitude = 0.0;
  double longitude = 0.0;

  double field(Curve c) const;
  double& field(Curve c);

  bool operator==(const LogRecord&) const = default;
};

/// Depth-ordered records of one well. raw_depths keeps the physical depths
/// in meters across normalization; gap detection always works on them.
struct WellLog {
  std::string well_id;
  std::vector<LogRecord> records;
  std::vector<double> raw_depths;

  Index size() const { return static_cast<Index>(records.size()); }

  Vector curve(Curve c) const;
  Matrix features(std::span<const Curve> curves) const;

  bool operator==(const WellLog&) const = default;
};

/// Immutable collection of wells, ordered by well id.
struct Dataset {
  std::vector<WellLog> wells;

  const WellLog* find(std::string_view well_id) const;
  std::size_t record_count() const;

  bool operator==(const Dataset&) const = default;
};

}  // namespace wellkit
