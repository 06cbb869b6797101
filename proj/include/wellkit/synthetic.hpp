#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wellkit/types.hpp"

namespace wellkit {

/// Target-curve shapes for generated wells.
enum class NphiShape {
  Linear,       // exact linear combination of the rhob and gr curves
  Plateau,      // step function of depth (two levels)
  NoisyLinear,  // Linear plus truncated Gaussian noise
  DepthTrend,   // exact affine function of depth
};

struct SyntheticWellSpec {
  std::string id = "SYN-01";
  std::size_t n = 1200;
  double depth_start = 800.0;
  double depth_step = 0.1;
  double latitude = 52.0;
  double longitude = 4.0;
  NphiShape shape = NphiShape::NoisyLinear;
  double noise_sigma = 0.0125;
  std::uint64_t seed = 7;
  /// true: physical-looking scales (g/cc, us/ft, API, degrees);
  /// false: curves already in [0, 1], as a canonical dataset holds them.
  bool raw_scales = true;
};

/// Gapless well on a uniform depth grid with smooth pseudo-random sensor
/// curves and the requested target shape.
WellLog make_synthetic_well(const SyntheticWellSpec& spec);

/// Removes half-open index ranges (sorted, non-overlapping), leaving depth
/// discontinuities behind. Returns the planted gap lengths in meters.
WellLog delete_index_ranges(const WellLog& well,
                            const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                            std::vector<double>* planted_lengths = nullptr);

struct CensusCorpus {
  Dataset dataset;
  std::vector<double> planted_lengths;  // meters, one per planted gap
};

/// Multi-well raw corpus with a known number of planted gaps, for
/// exercising gap detection end to end.
CensusCorpus make_census_corpus(std::uint64_t seed, std::size_t n_wells, std::size_t n_gaps);

/// The bundled three-well demo corpus: a long gapless well suitable for
/// benchmarking, a well with three gaps for gap analysis and filling, and
/// a short well.
Dataset make_demo_corpus(std::uint64_t seed = 20240901);

}  // namespace wellkit
