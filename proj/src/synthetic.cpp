#include "wellkit/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "wellkit/errors.hpp"
#include "wellkit/rng.hpp"

namespace wellkit {

namespace {

/// Smooth curve in roughly [0.07, 0.93]: two sinusoids with random
/// frequency/phase plus a little jitter.
struct CurveShape {
  double f1, p1, f2, p2;

  static CurveShape draw(Rng& rng) {
    return CurveShape{rng.uniform(1.5, 4.5), rng.uniform(0.0, 2.0 * std::numbers::pi),
                      rng.uniform(5.0, 9.0), rng.uniform(0.0, 2.0 * std::numbers::pi)};
  }

  double operator()(double x, double jitter) const {
    const double base = 0.5 + 0.28 * std::sin(2.0 * std::numbers::pi * f1 * x + p1) +
                        0.13 * std::sin(2.0 * std::numbers::pi * f2 * x + p2);
    return base + jitter;
  }
};

double truncated_normal(Rng& rng, double bound) {
  for (;;) {
    const double z = rng.normal();
    if (std::abs(z) <= bound) return z;
  }
}

}  // namespace

WellLog make_synthetic_well(const SyntheticWellSpec& spec) {
  if (spec.n < 2) throw ParameterError("synthetic well needs at least 2 records");
  Rng rng(spec.seed);
  const CurveShape rhob_shape = CurveShape::draw(rng);
  const CurveShape dt_shape = CurveShape::draw(rng);
  const CurveShape gr_shape = CurveShape::draw(rng);

  WellLog well;
  well.well_id = spec.id;
  well.records.reserve(spec.n);
  well.raw_depths.reserve(spec.n);

  for (std::size_t i = 0; i < spec.n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(spec.n - 1);
    const double raw_depth = spec.depth_start + static_cast<double>(i) * spec.depth_step;

    const double u_rhob = rhob_shape(x, rng.uniform(-0.02, 0.02));
    const double u_dt = dt_shape(x, rng.uniform(-0.02, 0.02));
    const double u_gr = gr_shape(x, rng.uniform(-0.02, 0.02));

    double nphi = 0.0;
    switch (spec.shape) {
      case NphiShape::Linear:
        nphi = 0.5 * u_rhob + 0.2 * u_gr;
        break;
      case NphiShape::Plateau:
        nphi = x < 0.5 ? 0.25 : 0.65;
        break;
      case NphiShape::NoisyLinear:
        nphi = 0.15 + 0.5 * u_rhob + 0.2 * u_gr +
               spec.noise_sigma * truncated_normal(rng, 4.0);
        break;
      case NphiShape::DepthTrend:
        nphi = 0.2 + 0.5 * x;
        break;
    }

    LogRecord rec;
    rec.nphi = nphi;
    if (spec.raw_scales) {
      rec.depth = raw_depth;
      rec.rhob = 1.9 + 1.0 * u_rhob;
      rec.dt = 50.0 + 100.0 * u_dt;
      rec.gr = 5.0 + 145.0 * u_gr;
      rec.latitude = spec.latitude;
      rec.longitude = spec.longitude;
    } else {
      rec.depth = x;
      rec.rhob = u_rhob;
      rec.dt = u_dt;
      rec.gr = u_gr;
      rec.latitude = spec.latitude;
      rec.longitude = spec.longitude;
    }
    well.records.push_back(rec);
    well.raw_depths.push_back(raw_depth);
  }
  return well;
}

WellLog delete_index_ranges(const WellLog& well,
                            const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                            std::vector<double>* planted_lengths) {
  WellLog out;
  out.well_id = well.well_id;
  std::size_t next_range = 0;
  for (std::size_t i = 0; i < well.records.size(); ++i) {
    while (next_range < ranges.size() && i >= ranges[next_range].second) ++next_range;
    const bool deleted =
        next_range < ranges.size() && i >= ranges[next_range].first && i < ranges[next_range].second;
    if (deleted) continue;
    out.records.push_back(well.records[i]);
    out.raw_depths.push_back(well.raw_depths[i]);
  }
  if (planted_lengths) {
    for (const auto& [begin, end] : ranges) {
      if (begin == 0 || end >= well.raw_depths.size()) {
        throw ParameterError("deleted range must keep the first and last record");
      }
      planted_lengths->push_back(well.raw_depths[end] - well.raw_depths[begin - 1]);
    }
  }
  return out;
}

CensusCorpus make_census_corpus(std::uint64_t seed, std::size_t n_wells, std::size_t n_gaps) {
  if (n_wells < 1) throw ParameterError("need at least one well");
  CensusCorpus corpus;

  // spread the gaps over the first ~80% of wells, keeping the rest gapless
  const std::size_t gappy_wells = std::max<std::size_t>(1, (n_wells * 4) / 5);
  std::vector<std::size_t> gaps_per_well(n_wells, 0);
  for (std::size_t g = 0; g < n_gaps; ++g) gaps_per_well[g % gappy_wells] += 1;

  for (std::size_t w = 0; w < n_wells; ++w) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(w)}));

    SyntheticWellSpec spec;
    char id[32];
    std::snprintf(id, sizeof(id), "C%02u-%02u", static_cast<unsigned>(w / 10),
                  static_cast<unsigned>(w % 10));
    spec.id = id;
    spec.n = 600 + rng.below(800);
    spec.depth_start = 100.0 + 25.0 * static_cast<double>(rng.below(60));
    spec.latitude = 51.0 + rng.uniform(0.0, 3.0);
    spec.longitude = 2.5 + rng.uniform(0.0, 3.5);
    spec.shape = NphiShape::NoisyLinear;
    spec.seed = derive_seed(seed, {0xFEEDULL, static_cast<std::uint64_t>(w)});
    WellLog well = make_synthetic_well(spec);

    // place the planted deletions left to right with margins between them
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t cursor = 2;
    for (std::size_t g = 0; g < gaps_per_well[w]; ++g) {
      // log-uniform record count in [2, 350]
      const double lo = std::log(2.0);
      const double hi = std::log(350.0);
      const auto count = static_cast<std::size_t>(std::exp(rng.uniform(lo, hi)));
      const std::size_t remaining_gaps = gaps_per_well[w] - g - 1;
      const std::size_t reserve_tail = remaining_gaps * 6 + 2;
      if (cursor + count + reserve_tail >= spec.n) {
        throw Error("internal: census corpus does not fit its planted gaps");
      }
      const std::size_t slack = spec.n - reserve_tail - count - cursor;
      const std::size_t start = cursor + rng.below(std::max<std::size_t>(1, slack / 2));
      ranges.emplace_back(start, start + count);
      cursor = start + count + 3;
    }
    corpus.dataset.wells.push_back(
        ranges.empty() ? std::move(well)
                       : delete_index_ranges(well, ranges, &corpus.planted_lengths));
  }

  std::sort(corpus.dataset.wells.begin(), corpus.dataset.wells.end(),
            [](const WellLog& a, const WellLog& b) { return a.well_id < b.well_id; });
  return corpus;
}

Dataset make_demo_corpus(std::uint64_t seed) {
  Dataset out;

  SyntheticWellSpec bench;
  bench.id = "SYN-01";
  bench.n = 1200;
  bench.depth_start = 812.0;
  bench.latitude = 52.05;
  bench.longitude = 3.22;
  bench.shape = NphiShape::NoisyLinear;
  bench.seed = derive_seed(seed, {1});
  out.wells.push_back(make_synthetic_well(bench));

  SyntheticWellSpec gappy;
  gappy.id = "SYN-02";
  gappy.n = 420;
  gappy.depth_start = 655.0;
  gappy.latitude = 52.61;
  gappy.longitude = 4.01;
  gappy.shape = NphiShape::DepthTrend;
  gappy.seed = derive_seed(seed, {2});
  const WellLog full = make_synthetic_well(gappy);
  out.wells.push_back(delete_index_ranges(full, {{60, 64}, {200, 212}, {330, 390}}));

  SyntheticWellSpec shorty;
  shorty.id = "SYN-03";
  shorty.n = 80;
  shorty.depth_start = 903.0;
  shorty.latitude = 53.10;
  shorty.longitude = 3.75;
  shorty.shape = NphiShape::Linear;
  shorty.seed = derive_seed(seed, {3});
  out.wells.push_back(make_synthetic_well(shorty));

  return out;
}

}  // namespace wellkit
