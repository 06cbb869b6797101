#include "wellkit/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "wellkit/errors.hpp"
#include "wellkit/stats.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

long Gap::approx_points() const {
  return std::lround(length() / kNominalDepthStep);
}

std::vector<Gap> detect_gaps(const WellLog& well, double threshold) {
  std::vector<Gap> gaps;
  for (std::size_t i = 1; i < well.raw_depths.size(); ++i) {
    const double before = well.raw_depths[i - 1];
    const double after = well.raw_depths[i];
    if (!(after > before)) {
      throw ParameterError("non-monotonic depths in well " + well.well_id + " near depth " +
                           format_double(before));
    }
    if (after - before > threshold + kGapComparisonTolerance) {
      gaps.push_back(Gap{well.well_id, before, after});
    }
  }
  return gaps;
}

std::vector<Gap> detect_gaps(const Dataset& dataset, double threshold) {
  std::vector<Gap> gaps;
  for (const WellLog& w : dataset.wells) {
    auto found = detect_gaps(w, threshold);
    gaps.insert(gaps.end(), found.begin(), found.end());
  }
  return gaps;
}

GapStats summarize_gaps(const std::vector<Gap>& gaps) {
  if (gaps.empty()) throw ParameterError("no gaps to summarize");
  std::vector<double> lengths;
  lengths.reserve(gaps.size());
  for (const Gap& g : gaps) lengths.push_back(g.length());
  std::sort(lengths.begin(), lengths.end());

  GapStats stats;
  stats.count = lengths.size();
  stats.min = lengths.front();
  stats.max = lengths.back();
  stats.q25 = quantile_sorted(lengths, 0.25);
  stats.q50 = quantile_sorted(lengths, 0.50);
  stats.q75 = quantile_sorted(lengths, 0.75);
  stats.mean = mean(Eigen::Map<const Vector>(lengths.data(), static_cast<Index>(lengths.size())));
  stats.std =
      sample_std(Eigen::Map<const Vector>(lengths.data(), static_cast<Index>(lengths.size())));
  return stats;
}

HistogramSpec gap_histogram(const std::vector<Gap>& gaps, const HistogramOptions& options) {
  if (gaps.empty()) throw ParameterError("no gaps to bin");
  if (options.bin_count == 0) throw ParameterError("bin_count must be >= 1");

  std::vector<double> lengths;
  lengths.reserve(gaps.size());
  for (const Gap& g : gaps) lengths.push_back(g.length());
  std::sort(lengths.begin(), lengths.end());

  double lo = lengths.front();
  double hi = options.scale == HistogramScale::Linear ? quantile_sorted(lengths, 0.75)
                                                      : lengths.back();
  if (!(hi > lo)) {
    // degenerate span: widen so the edges stay strictly increasing
    if (options.scale == HistogramScale::Log10) {
      lo *= 0.5;
      hi *= 2.0;
    } else {
      lo -= 0.5;
      hi += 0.5;
    }
  }

  HistogramSpec hist;
  hist.scale = options.scale;
  hist.bin_edges.resize(options.bin_count + 1);
  if (options.scale == HistogramScale::Log10) {
    const double llo = std::log10(lo);
    const double lhi = std::log10(hi);
    for (std::size_t i = 0; i <= options.bin_count; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(options.bin_count);
      hist.bin_edges[i] = std::pow(10.0, llo + t * (lhi - llo));
    }
    hist.bin_edges.front() = lo;
    hist.bin_edges.back() = hi;
  } else {
    for (std::size_t i = 0; i <= options.bin_count; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(options.bin_count);
      hist.bin_edges[i] = lo + t * (hi - lo);
    }
  }

  hist.counts.assign(options.bin_count, 0);
  for (double v : lengths) {
    if (v < hist.bin_edges.front() || v > hist.bin_edges.back()) continue;
    const auto it = std::upper_bound(hist.bin_edges.begin(), hist.bin_edges.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - hist.bin_edges.begin());
    idx = idx == 0 ? 0 : idx - 1;
    if (idx >= hist.counts.size()) idx = hist.counts.size() - 1;  // last bin closed
    ++hist.counts[idx];
  }
  return hist;
}

void write_gaps_csv(const std::vector<Gap>& gaps, std::ostream& out) {
  out << "well,depth_before,depth_after,length_m,approx_points\n";
  for (const Gap& g : gaps) {
    out << g.well_id << ',' << format_double(g.depth_before) << ','
        << format_double(g.depth_after) << ',' << format_double(g.length()) << ','
        << g.approx_points() << '\n';
  }
}

void write_gap_stats(const GapStats& stats, std::ostream& out) {
  out << "count=" << stats.count << '\n';
  out << "mean=" << format_double(stats.mean) << '\n';
  out << "std=" << format_double(stats.std) << '\n';
  out << "min=" << format_double(stats.min) << '\n';
  out << "25%=" << format_double(stats.q25) << '\n';
  out << "50%=" << format_double(stats.q50) << '\n';
  out << "75%=" << format_double(stats.q75) << '\n';
  out << "max=" << format_double(stats.max) << '\n';
}

void write_histogram_csv(const HistogramSpec& hist, std::ostream& out) {
  out << "bin_left,bin_right,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    out << format_double(hist.bin_edges[i]) << ',' << format_double(hist.bin_edges[i + 1]) << ','
        << hist.counts[i] << '\n';
  }
}

}  // namespace wellkit
