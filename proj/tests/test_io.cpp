#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "crosskiss/catalog.hpp"
#include "crosskiss/json_io.hpp"
#include "test_util.hpp"

using namespace crosskiss;
using nlohmann::json;
using testutil::random_ratvec;

TEST_CASE("rational and vector JSON round-trips (property)") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    RatVec v = random_ratvec(rng, 6, 1000, 1000);
    json j = to_json(v);
    CHECK(ratvec_from_json(j) == v);
  }
  CHECK(rational_from_json(json(-7)) == Rational(-7));
  CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
}

TEST_CASE("lattice file round-trip") {
  for (const char* key : {"l_prime", "half_d4_plus", "h2_sum_h2"}) {
    Lattice lat = named_lattice(key);
    json j = lattice_to_json(lat);
    CHECK(j.at("n") == 4);
    Lattice back = lattice_from_json(j);
    CHECK(back.equals(lat));
    CHECK(back.basis() == lat.basis());
  }
  json bad = {{"n", 3}, {"basis", json::array({json::array({"1", "0"})})}};
  CHECK_THROWS_AS(lattice_from_json(bad), std::invalid_argument);
}

TEST_CASE("configuration round-trip") {
  auto m = minimal_vectors(named_lattice("l_prime"));
  KissingConfiguration cfg{4, m.minimum, m.vectors, std::nullopt};
  KissingConfiguration back = configuration_from_json(to_json(cfg));
  CHECK(back.n == cfg.n);
  CHECK(back.scale == cfg.scale);
  CHECK(back.points == cfg.points);
}

TEST_CASE("minimal-vector report shape") {
  auto m = minimal_vectors(named_lattice("zn", 4));
  json j = to_json(m);
  CHECK(j.at("count") == 8);
  CHECK(j.at("minimum") == "1");
  CHECK(j.at("vectors").size() == 8);
}

TEST_CASE("validity report carries 1-based indices") {
  KissingConfiguration cfg{2, Rational(1), {RatVec{Rational(1), Rational(0)}, RatVec{Rational(1), Rational(0)}}, std::nullopt};
  json j = to_json(verify_kissing_configuration(cfg));
  CHECK(j.at("valid") == false);
  CHECK(j.at("violation").at("i") == 1);
  CHECK(j.at("violation").at("j") == 2);
  CHECK(j.at("violation").at("distance") == "0");
}

TEST_CASE("serialization is byte-stable") {
  auto cert = covering_radius_h2sum();
  std::string a = to_json(cert).dump(2);
  std::string b = to_json(cert).dump(2);
  CHECK(a == b);
  json j = to_json(minimal_vectors(named_lattice("half_d4_plus")));
  CHECK(j.dump() == j.dump());
}
