#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gsalign/io_json.hpp"

using namespace gsalign;

TEST_CASE("complex matrices round-trip through JSON") {
  const Matrix m = sample_complex_gaussian(3, 5, 42);
  const Matrix back = matrix_from_json(matrix_to_json(m));
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 5);
  CHECK(back == m);  // bit-exact: doubles serialize exactly
  CHECK_THROWS_AS(matrix_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("design serialization carries every block") {
  const ChannelRealization ch = sample_channels(SystemConfig{4, 3, 7}, 8);
  const DataSwitchMatrix D = make_pattern(Pattern::Y, 4, 1);
  const GsaDesign de = design_for_target(ch, D, 3, 7, Pattern::Y);
  const Json j = to_json(de);
  CHECK(j.at("route") == "generic");
  CHECK(j.at("pairs").size() == 6);
  CHECK(matrix_from_json(j.at("P")) == de.P);
  CHECK(matrix_from_json(j.at("B")) == de.B);
  CHECK(matrix_from_json(j.at("pairs")[0].at("V_forward")) == de.V.at({1, 2}));
}

TEST_CASE("pattern names") {
  CHECK(pattern_from_string("y") == Pattern::Y);
  CHECK(pattern_from_string("pairwise") == Pattern::Pairwise);
  CHECK(pattern_from_string("x") == Pattern::X);
  CHECK(pattern_from_string("l-cluster") == Pattern::LCluster);
  CHECK(pattern_to_string(Pattern::Pairwise) == "pairwise");
  CHECK_THROWS_AS(pattern_from_string("zigzag"), std::invalid_argument);
}

TEST_CASE("run config parsing") {
  const Json j{{"K", 4}, {"M", 3}, {"N", 7}, {"model", "y"},
               {"streams", 2}, {"seed", 99}};
  const RunConfig cfg = parse_run_config(j);
  CHECK(cfg.system.K == 4);
  CHECK(cfg.streams_per_pair == 2);
  CHECK(cfg.seed == 99);
  CHECK(cfg.seed_given);
  CHECK(cfg.resolve_streams().at(1, 2) == 2);

  SUBCASE("explicit stream matrix wins") {
    Json e = j;
    e["stream_matrix"] = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, 3, 0}};
    const RunConfig c2 = parse_run_config(e);
    CHECK(c2.resolve_streams().at(3, 4) == 3);
    CHECK(c2.resolve_streams().at(1, 3) == 0);
  }
  SUBCASE("asymmetric matrix rejected") {
    Json e = j;
    e["stream_matrix"] = {{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    CHECK_THROWS_AS(parse_run_config(e), std::invalid_argument);
  }
  SUBCASE("missing traffic description rejected") {
    CHECK_THROWS_AS(parse_run_config(Json{{"K", 4}, {"M", 3}, {"N", 7}}),
                    std::invalid_argument);
  }
}

TEST_CASE("missing config file error names the path") {
  CHECK_THROWS_WITH_AS(load_run_config("/nonexistent/cfg.json"),
                       doctest::Contains("/nonexistent/cfg.json"),
                       std::runtime_error);
}

TEST_CASE("CSV output: comment header and 12 significant digits") {
  std::ostringstream os;
  write_csv(os, {"a", "b"}, {{1.0 / 3.0, 2.0}, {1e-9, 123456789012345.0}});
  const std::string text = os.str();
  CHECK(text == "# a,b\n0.333333333333,2\n1e-09,1.23456789012e+14\n");
}

TEST_CASE("CSV values round-trip at emitted precision") {
  const std::vector<std::vector<double>> rows{{3.14159265358979, 0.5}, {2e300, -7.25}};
  std::ostringstream os;
  write_csv(os, {"x", "y"}, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);  // header
  for (const auto& row : rows) {
    std::getline(in, line);
    std::istringstream cells(line);
    std::string cell;
    for (double v : row) {
      std::getline(cells, cell, ',');
      const double parsed = std::stod(cell);
      CHECK(parsed == doctest::Approx(v).epsilon(1e-11));
    }
  }
}

TEST_CASE("report serialization") {
  SimReport r;
  r.K = 4; r.M = 3; r.N = 7;
  r.feasible = true;
  r.route = "beta";
  r.beta = 2;
  r.q = 2;
  r.streams_delivered = 12;
  const Json j = to_json(r);
  CHECK(j.at("beta") == 2);
  CHECK(j.at("streams_delivered") == 12);
  CHECK(j.at("feasible") == true);
}
