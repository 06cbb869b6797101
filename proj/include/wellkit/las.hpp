#pragma once

#include <filesystem>
#include <iosfwd>

#include "wellkit/csv.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

struct LasOptions {
  /// Null sentinel; a NULL entry in the ~Well section overrides it.
  double null_value = -999.25;
};

/// Parses an unwrapped LAS 2.0 file (~V/~W/~C/~A sections, WRAP=NO,
/// whitespace-delimited data rows). The well id comes from the WELL
/// mnemonic, latitude/longitude from LATI/LONG when present. Columns are
/// mapped by ~Curve order; rows missing any of depth, RHOB, DT, GR, NPHI
/// (null value or absent curve) are excluded. Wrapped files and files with
/// no surviving complete record are rejected.
WellLog parse_las(std::istream& in, const LasOptions& options = {}, ParseReport* report = nullptr);
WellLog parse_las_file(const std::filesystem::path& path, const LasOptions& options = {},
                       ParseReport* report = nullptr);

}  // namespace wellkit
