#include "wellkit/types.hpp"

#include <algorithm>

#include "wellkit/errors.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

std::string_view curve_name(Curve c) {
  switch (c) {
    case Curve::Depth: return "depth";
    case Curve::Rhob: return "rhob";
    case Curve::Dt: return "dt";
    case Curve::Gr: return "gr";
    case Curve::Nphi: return "nphi";
    case Curve::Latitude: return "latitude";
    case Curve::Longitude: return "longitude";
  }
  return "unknown";
}

std::optional<Curve> curve_from_name(std::string_view name) {
  const std::string lower = to_lower(trim(name));
  for (Curve c : kAllCurves) {
    if (lower == curve_name(c)) return c;
  }
  if (lower == "dept") return Curve::Depth;
  if (lower == "lat") return Curve::Latitude;
  if (lower == "lati") return Curve::Latitude;
  if (lower == "lon") return Curve::Longitude;
  if (lower == "long") return Curve::Longitude;
  return std::nullopt;
}

double LogRecord::field(Curve c) const {
  switch (c) {
    case Curve::Depth: return depth;
    case Curve::Rhob: return rhob;
    case Curve::Dt: return dt;
    case Curve::Gr: return gr;
    case Curve::Nphi: return nphi;
    case Curve::Latitude: return latitude;
    case Curve::Longitude: return longitude;
  }
  throw ParameterError("unknown curve");
}

double& LogRecord::field(Curve c) {
  switch (c) {
    case Curve::Depth: return depth;
    case Curve::Rhob: return rhob;
    case Curve::Dt: return dt;
    case Curve::Gr: return gr;
    case Curve::Nphi: return nphi;
    case Curve::Latitude: return latitude;
    case Curve::Longitude: return longitude;
  }
  throw ParameterError("unknown curve");
}

Vector WellLog::curve(Curve c) const {
  Vector v(size());
  for (Index i = 0; i < size(); ++i) {
    v(i) = records[static_cast<std::size_t>(i)].field(c);
  }
  return v;
}

Matrix WellLog::features(std::span<const Curve> curves) const {
  Matrix m(size(), static_cast<Index>(curves.size()));
  for (Index j = 0; j < static_cast<Index>(curves.size()); ++j) {
    for (Index i = 0; i < size(); ++i) {
      m(i, j) = records[static_cast<std::size_t>(i)].field(curves[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

const WellLog* Dataset::find(std::string_view well_id) const {
  const auto it = std::find_if(wells.begin(), wells.end(),
                               [&](const WellLog& w) { return w.well_id == well_id; });
  return it == wells.end() ? nullptr : &*it;
}

std::size_t Dataset::record_count() const {
  std::size_t n = 0;
  for (const WellLog& w : wells) n += w.records.size();
  return n;
}

}  // namespace wellkit
