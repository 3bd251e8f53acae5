#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "scnlb/errors.hpp"
#include "scnlb/generate.hpp"
#include "scnlb/scenario.hpp"
#include "scnlb/scenario_io.hpp"
#include "test_util.hpp"

using namespace scnlb;

namespace {

// Two stations at the same spot, near-zero noise.
Scenario colocated_pair(double tx1_dbm, double tx2_dbm) {
  Scenario sc;
  sc.area = {0.0, 0.0, 2000.0, 2000.0};
  sc.radio.noise_power_dbm = -300.0;
  sc.grid_nx = 1;
  sc.grid_ny = 1;
  for (int i = 0; i < 2; ++i) {
    BaseStation bs;
    bs.id = i + 1;
    bs.kind = BsKind::Small;
    bs.position = {1000.0, 1000.0};
    bs.tx_power_dbm = i == 0 ? tx1_dbm : tx2_dbm;
    sc.base_stations.push_back(bs);
  }
  TrafficPoint tp;
  tp.location = {500.0, 500.0};
  tp.arrival_rate = 1e-6;
  sc.traffic.push_back(tp);
  return sc;
}

}  // namespace

TEST_CASE("path loss closed forms") {
  CHECK(path_loss_db(BsKind::Macro, 1000.0) == doctest::Approx(128.1).epsilon(1e-12));
  CHECK(path_loss_db(BsKind::Small, 1.0) == doctest::Approx(38.0).epsilon(1e-12));
  CHECK(path_loss_db(BsKind::Macro, 10000.0) == doctest::Approx(165.7).epsilon(1e-12));
}

TEST_CASE("path loss rejects non-positive distance") {
  CHECK_THROWS_AS(path_loss_db(BsKind::Macro, 0.0), std::domain_error);
  CHECK_THROWS_AS(path_loss_db(BsKind::Small, -5.0), std::domain_error);
}

TEST_CASE("path loss strictly increases with distance") {
  for (BsKind kind : {BsKind::Macro, BsKind::Small}) {
    double prev = path_loss_db(kind, 2.0);
    for (double d : {10.0, 50.0, 200.0, 1000.0, 5000.0, 20000.0}) {
      double pl = path_loss_db(kind, d);
      CHECK(pl > prev);
      prev = pl;
    }
  }
}

TEST_CASE("single-station SINR is signal over noise") {
  Scenario sc = colocated_pair(33.0, 33.0);
  sc.base_stations.pop_back();
  sc.radio.noise_power_dbm = -104.0;
  Location loc{500.0, 500.0};
  double rx_dbm = received_power_dbm(sc.base_stations[0], loc, sc.radio);
  double expected = std::pow(10.0, (rx_dbm - (-104.0)) / 10.0);
  CHECK(sinr(loc, 0, sc) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("co-located identical stations have unit SINR") {
  Scenario sc = colocated_pair(33.0, 33.0);
  CHECK(sinr({500.0, 500.0}, 0, sc) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sinr({500.0, 500.0}, 1, sc) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("SINR on a generated scenario matches an independent dB chain") {
  Scenario sc = generate_scenario(42);
  for (Location loc : {Location{120.0, 340.0}, Location{1503.0, 777.0}, Location{1999.0, 5.0}}) {
    std::vector<double> rx_mw(sc.base_stations.size());
    for (size_t b = 0; b < sc.base_stations.size(); ++b) {
      const auto& bs = sc.base_stations[b];
      double d = std::max(std::hypot(bs.position.x - loc.x, bs.position.y - loc.y), 1.0);
      double pl = bs.kind == BsKind::Macro ? 128.1 + 37.6 * std::log10(d / 1000.0)
                                           : 38.0 + 10.0 * std::log10(d);
      double rx_dbm = bs.tx_power_dbm + bs.antenna_gain_db - pl - 5.0 - 9.0;
      rx_mw[b] = std::pow(10.0, rx_dbm / 10.0);
    }
    double noise = std::pow(10.0, sc.radio.noise_power_dbm / 10.0);
    for (size_t b = 0; b < sc.base_stations.size(); ++b) {
      double interference = 0.0;
      for (size_t k = 0; k < sc.base_stations.size(); ++k)
        if (k != b) interference += rx_mw[k];
      double expected = rx_mw[b] / (noise + interference);
      CHECK(sinr(loc, static_cast<int>(b), sc) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("rate closed forms") {
  Location loc{500.0, 500.0};

  SUBCASE("unit SINR gives bandwidth") {
    Scenario sc = colocated_pair(33.0, 33.0);
    CHECK(rate_bps(loc, 0, sc) == doctest::Approx(1e7).epsilon(1e-9));
  }
  SUBCASE("SINR of three doubles the bandwidth") {
    Scenario sc = colocated_pair(33.0 + 10.0 * std::log10(3.0), 33.0);
    CHECK(sinr(loc, 0, sc) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(rate_bps(loc, 0, sc) == doctest::Approx(2e7).epsilon(1e-9));
  }
  SUBCASE("zero below receiver sensitivity") {
    Scenario sc = colocated_pair(33.0, 33.0);
    sc.base_stations[1].tx_power_dbm = -200.0;  // received far below -123 dBm
    CHECK(rate_bps(loc, 1, sc) == 0.0);
    double rx = received_power_dbm(sc.base_stations[1], loc, sc.radio);
    CHECK(rx < sc.radio.receiver_sensitivity_dbm);
  }
}

TEST_CASE("rate grows with SINR") {
  Location loc{500.0, 500.0};
  double prev = 0.0;
  for (double boost : {0.0, 3.0, 6.0, 10.0, 20.0}) {
    Scenario sc = colocated_pair(33.0 + boost, 33.0);
    double r = rate_bps(loc, 0, sc);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("generated scenario is deterministic per seed") {
  Scenario a = generate_scenario(7);
  Scenario b = generate_scenario(7);
  CHECK(scenario_to_json(a).dump() == scenario_to_json(b).dump());
  Scenario c = generate_scenario(8);
  CHECK(scenario_to_json(a).dump() != scenario_to_json(c).dump());
}

TEST_CASE("generated scenario carries the reference defaults") {
  Scenario sc = generate_scenario(1);
  REQUIRE(sc.num_bs() == 10);
  const std::vector<double> hit = {0.27, 0.12, 0.28, 0.12, 0.17, 0.22, 0.22, 0.24, 0.24, 0.19};
  for (int b = 0; b < 10; ++b) {
    const auto& bs = sc.base_stations[b];
    CHECK(bs.id == b + 1);
    CHECK(bs.cache_hit_ratio == hit[b]);
    if (b < 3) {
      CHECK(bs.kind == BsKind::Macro);
      CHECK(bs.tx_power_dbm == 43.0);
      CHECK(bs.static_power_w == 750.0);
      CHECK(bs.load_power_coeff_w == 500.0);
      CHECK(bs.green_supply_w >= 750.0);
      CHECK(bs.green_supply_w <= 1300.0);
    } else {
      CHECK(bs.kind == BsKind::Small);
      CHECK(bs.tx_power_dbm == 33.0);
      CHECK(bs.static_power_w == 37.0);
      CHECK(bs.load_power_coeff_w == 4.0);
      CHECK(bs.backhaul_rate_bps == 5e6);
      CHECK(bs.green_supply_w >= 37.0);
      CHECK(bs.green_supply_w <= 48.0);
    }
    CHECK(bs.panel_area_m2 == doctest::Approx(bs.green_supply_w / 174.0));
  }
}

TEST_CASE("grid parameter controls the traffic resolution") {
  GenerateParams params;
  params.grid = 40;
  Scenario sc = generate_scenario(3, params);
  CHECK(sc.num_points() == 1600);
  CHECK(sc.grid_nx == 40);
  CHECK(sc.grid_ny == 40);
  for (const auto& tp : sc.traffic) CHECK(tp.cell_area_m2 == doctest::Approx(2500.0));
}

TEST_CASE("every generated point has a usable station") {
  Scenario sc = generate_scenario(11);
  for (int p = 0; p < sc.num_points(); ++p) {
    bool covered = false;
    for (int b = 0; b < sc.num_bs() && !covered; ++b)
      covered = rate_bps(sc.traffic[p].location, b, sc) > 0.0;
    CHECK(covered);
  }
}

TEST_CASE("generator rejects bad parameters") {
  GenerateParams params;
  params.macro_count = 0;
  params.small_count = 0;
  CHECK_THROWS_AS(generate_scenario(1, params), ConfigError);
  params = {};
  params.grid = 0;
  CHECK_THROWS_AS(generate_scenario(1, params), ConfigError);
  params = {};
  params.area_size_m = 0.0;
  CHECK_THROWS_AS(generate_scenario(1, params), ConfigError);
}

TEST_CASE("scenario validation catches broken descriptions") {
  Scenario sc = generate_scenario(2, []{ GenerateParams p; p.grid = 5; return p; }());

  SUBCASE("duplicate ids") {
    sc.base_stations[1].id = sc.base_stations[0].id;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
  SUBCASE("cache ratio outside [0,1]") {
    sc.base_stations[0].cache_hit_ratio = 1.5;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
  SUBCASE("kappa negative") {
    sc.algorithm.kappa = -1.0;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
  SUBCASE("epsilon out of range") {
    sc.algorithm.epsilon = 0.7;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
  SUBCASE("no stations") {
    sc.base_stations.clear();
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
  SUBCASE("shared traffic location") {
    sc.traffic[1].location = sc.traffic[0].location;
    CHECK_THROWS_AS(sc.validate(), ConfigError);
  }
}

TEST_CASE("scenario file round-trips losslessly") {
  Scenario sc = generate_scenario(5, []{ GenerateParams p; p.grid = 8; return p; }());
  auto path = std::filesystem::temp_directory_path() / "scnlb_roundtrip_scenario.json";
  save_scenario(sc, path);
  Scenario back = load_scenario(path);
  CHECK(scenario_to_json(back).dump() == scenario_to_json(sc).dump());
  save_scenario(back, path);
  Scenario again = load_scenario(path);
  CHECK(scenario_to_json(again).dump() == scenario_to_json(sc).dump());
  std::filesystem::remove(path);
}
