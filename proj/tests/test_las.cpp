#include <doctest.h>

#include <sstream>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/las.hpp"

using namespace wellkit;

namespace {

WellLog parse_text(const std::string& text, const LasOptions& options = {},
                   ParseReport* report = nullptr) {
  std::istringstream in(text);
  return parse_las(in, options, report);
}

const std::string kGolden =
    "~Version information\n"
    " VERS.   2.0 : CWLS log ASCII standard\n"
    " WRAP.   NO  : one line per depth step\n"
    "~Well information\n"
    " WELL.   F02-02        : well name\n"
    " NULL.   -999.25       : null value\n"
    " LATI.   54.3          : latitude\n"
    " LONG.   2.93          : longitude\n"
    "~Curve information\n"
    " DEPT.M  : depth\n"
    " RHOB.K/M3 : bulk density\n"
    " DT.US/M : sonic\n"
    " GR.GAPI : gamma ray\n"
    " NPHI.V/V : neutron porosity\n"
    "~ASCII data\n"
    " 100.0  2.31  140.2  75.0  0.30\n"
    " 100.1  2.32  141.0  74.2  0.31\n"
    " 100.2  2.33  139.8  73.9  0.29\n";

}  // namespace

TEST_CASE("golden file parses into three records") {
  ParseReport report;
  const WellLog well = parse_text(kGolden, {}, &report);
  CHECK(well.well_id == "F02-02");
  REQUIRE(well.records.size() == 3);
  CHECK(report.accepted == 3);
  CHECK(report.dropped == 0);

  CHECK(well.records[0].depth == doctest::Approx(100.0));
  CHECK(well.records[0].rhob == doctest::Approx(2.31));
  CHECK(well.records[0].dt == doctest::Approx(140.2));
  CHECK(well.records[0].gr == doctest::Approx(75.0));
  CHECK(well.records[0].nphi == doctest::Approx(0.30));
  CHECK(well.records[0].latitude == doctest::Approx(54.3));
  CHECK(well.records[0].longitude == doctest::Approx(2.93));
  CHECK(well.raw_depths == std::vector<double>{well.records[0].depth, well.records[1].depth,
                                               well.records[2].depth});
}

TEST_CASE("declared NULL excludes matching rows") {
  std::string text = kGolden;
  text += " 100.3  2.34  140.0  -999.25  0.30\n";
  ParseReport report;
  const WellLog well = parse_text(text, {}, &report);
  CHECK(well.records.size() == 3);
  CHECK(report.dropped == 1);
}

TEST_CASE("NULL mnemonic overrides the configured null value") {
  std::string text = kGolden;
  // configured null differs; the ~Well NULL line wins
  text += " 100.3  2.34  140.0  -999.25  0.30\n";
  LasOptions options;
  options.null_value = -1234.0;
  const WellLog well = parse_text(text, options);
  CHECK(well.records.size() == 3);
}

TEST_CASE("wrapped mode is rejected") {
  const std::string text =
      "~V\n VERS. 2.0 :\n WRAP. YES :\n~W\n WELL. X :\n~C\n DEPT.M :\n~A\n 1.0\n";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("WRAP"), FormatError);
}

TEST_CASE("missing data section is a format error") {
  const std::string text = "~V\n VERS. 2.0 :\n~W\n WELL. X :\n~C\n DEPT.M :\n";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("~ASCII"), FormatError);
}

TEST_CASE("descending files come back sorted by depth") {
  const std::string text =
      "~W\n WELL. UP :\n~C\n DEPT.M :\n RHOB. :\n DT. :\n GR. :\n NPHI. :\n~A\n"
      " 100.2  2.3  140.0  75.0  0.3\n"
      " 100.1  2.2  141.0  74.0  0.2\n"
      " 100.0  2.1  142.0  73.0  0.1\n";
  const WellLog well = parse_text(text);
  CHECK(well.records[0].depth == doctest::Approx(100.0));
  CHECK(well.records[2].depth == doctest::Approx(100.2));
  CHECK(well.records[0].nphi == doctest::Approx(0.1));
}

TEST_CASE("a well with no complete record is rejected") {
  // no NPHI curve declared at all
  const std::string text =
      "~W\n WELL. BARE :\n~C\n DEPT.M :\n RHOB. :\n DT. :\n GR. :\n~A\n"
      " 100.0  2.3  140.0  75.0\n";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("no complete records"), FormatError);
}

TEST_CASE("unknown curves are carried but ignored") {
  const std::string text =
      "~W\n WELL. MIXED :\n~C\n DEPT.M :\n CALI.MM : caliper\n RHOB. :\n DT. :\n GR. :\n NPHI. :\n"
      "~A\n 100.0  999.0  2.3  140.0  75.0  0.3\n 100.1  998.0  2.4  141.0  76.0  0.4\n";
  const WellLog well = parse_text(text);
  CHECK(well.records.size() == 2);
  CHECK(well.records[0].rhob == doctest::Approx(2.3));
}

TEST_CASE("duplicate depths are rejected") {
  std::string text = kGolden;
  text += " 100.2  9.99  9.9  9.9  0.9\n";
  CHECK_THROWS_AS(parse_text(text), SchemaError);
}

TEST_CASE("row width must match the curve count") {
  std::string text = kGolden;
  text += " 100.3  2.34  140.0\n";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("expected"), FormatError);
}

TEST_CASE("missing WELL mnemonic is a format error") {
  const std::string text =
      "~W\n NULL. -999.25 :\n~C\n DEPT.M :\n RHOB. :\n DT. :\n GR. :\n NPHI. :\n~A\n"
      " 100.0  2.3  140.0  75.0  0.3\n";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("WELL"), FormatError);
}
