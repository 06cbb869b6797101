#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellkit/types.hpp"

namespace wellkit {

inline constexpr double kDefaultGapThreshold = 0.2;  // meters
inline constexpr double kNominalDepthStep = 0.1;     // meters

/// Comparison slack for the threshold test. Depth values are decimal
/// meters stored as binary doubles, so a nominal 0.3 m step can come out a
/// few ulps above 0.3; one nanometer of slack restores the intended
/// decimal semantics without affecting any physical gap.
inline constexpr double kGapComparisonTolerance = 1e-9;  // meters

/// A depth discontinuity: consecutive records further apart than the
/// detection threshold.
struct Gap {
  std::string well_id;
  double depth_before = 0.0;
  double depth_after = 0.0;

  double length() const { return depth_after - depth_before; }

  /// Missing record count at the nominal 0.1 m step; informational.
  long approx_points() const;
};

struct GapStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double q25 = 0.0;
  double q50 = 0.0;
  double q75 = 0.0;
  double max = 0.0;
};

enum class HistogramScale { Linear, Log10 };

struct HistogramOptions {
  HistogramScale scale = HistogramScale::Log10;
  std::size_t bin_count = 30;
};

struct HistogramSpec {
  HistogramScale scale = HistogramScale::Log10;
  std::vector<double> bin_edges;   // meters, strictly increasing
  std::vector<std::size_t> counts;  // one per bin
};

/// One Gap per consecutive raw-depth pair strictly further apart than
/// threshold, ordered by depth.
std::vector<Gap> detect_gaps(const WellLog& well, double threshold = kDefaultGapThreshold);

/// Pooled gaps over all wells, ordered by (well id, depth).
std::vector<Gap> detect_gaps(const Dataset& dataset, double threshold = kDefaultGapThreshold);

/// Descriptive statistics of the gap lengths. Quartiles interpolate
/// linearly between closest ranks; std is the sample standard deviation.
GapStats summarize_gaps(const std::vector<Gap>& gaps);

/// Bins gap lengths. Log10 scale covers the full [min, max] range with
/// edges uniform in log10; linear scale is the zoom view, restricted to
/// [min, q75]. Bins are half-open with the last bin closed.
HistogramSpec gap_histogram(const std::vector<Gap>& gaps, const HistogramOptions& options);

void write_gaps_csv(const std::vector<Gap>& gaps, std::ostream& out);
void write_gap_stats(const GapStats& stats, std::ostream& out);
void write_histogram_csv(const HistogramSpec& hist, std::ostream& out);

}  // namespace wellkit
