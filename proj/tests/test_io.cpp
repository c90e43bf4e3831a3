#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "scs/constructions.hpp"
#include "scs/io.hpp"
#include "test_support.hpp"

using namespace scs;

TEST_CASE("sequence JSON round trip is bit exact") {
  std::mt19937_64 rng(5);
  const auto s = test::random_seq(rng, 33);
  std::stringstream buf;
  io::write_sequence(buf, s, 7);
  const auto back = io::read_sequence(buf);
  CHECK(back.domain() == Domain::time);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(back[i] == s[i]);
}

TEST_CASE("family JSON round trip") {
  const auto f = constructions::construction4(cfr_from_prime(5), {0}, 2);
  std::stringstream buf;
  io::write_family(buf, f);
  const std::string text = buf.str();
  const auto back = io::read_family(buf);
  CHECK(back.length() == f.length());
  CHECK(back.set_count() == 2);
  CHECK(back.set_size() == 5);
  CHECK(back.constraint() == f.constraint());
  CHECK(back.alphabet_order() == f.alphabet_order());
  REQUIRE(back.info());
  CHECK(back.info()->name == "c4");
  CHECK(back.info()->s0 == 0);
  CHECK(back.info()->h_descriptor == "dft");
  CHECK(back.info()->cfr_fingerprint == fingerprint(cfr_from_prime(5)));
  const auto a = f.members();
  const auto b = back.members();
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t t = 0; t < a[m].size(); ++t) CHECK(a[m][t] == b[m][t]);

  std::stringstream again;
  io::write_family(again, back);
  CHECK(again.str() == text);

  const auto j = nlohmann::json::parse(text);
  CHECK(j["L"] == 30);
  CHECK(j["K"] == 2);
  CHECK(j["M"] == 5);
  CHECK(j["omega"].size() == 5);
  CHECK(j["params"]["N"] == 5);
}

TEST_CASE("malformed family files are rejected") {
  const char* bad[] = {
      "not json",
      "{}",
      R"({"L":4,"K":1,"M":1,"omega":[],"sets":[[{"length":4,"domain":"time","values":[[1,0]]}]]})",
      R"({"L":2,"K":2,"M":1,"omega":[],"sets":[[{"length":2,"domain":"time","values":[[1,0],[1,0]]}]]})",
      R"({"L":2,"K":1,"M":1,"omega":[],"sets":[[{"length":2,"domain":"sideways","values":[[1,0],[1,0]]}]]})",
      R"({"L":2,"K":1,"M":1,"omega":[5],"sets":[[{"length":2,"domain":"time","values":[[1,0],[1,0]]}]]})",
      R"({"L":2,"K":1,"M":1,"omega":[],"sets":[[{"length":2,"domain":"time","values":[[1],[1,0]]}]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_family(in), io::FormatError);
  }
}

TEST_CASE("CSV writers") {
  std::ostringstream prof;
  io::write_profile_csv(prof, CorrelationProfile({Complex{3, 4}, Complex{0, 0}}));
  CHECK(prof.str() == "tau,re,im,mag\n0,3,4,5\n1,0,0,0\n");

  const auto f = constructions::construction1(cfr_from_prime(3));
  const auto report = spectral::check_spectrum(f.set(0)[0], f.constraint());
  std::ostringstream spec;
  io::write_spectrum_csv(spec, report, f.constraint());
  std::istringstream lines(spec.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "f,power,forbidden");
  int rows = 0;
  int forbidden = 0;
  while (std::getline(lines, line)) {
    ++rows;
    forbidden += line.back() == '1';
  }
  CHECK(rows == 12);
  CHECK(forbidden == 3);
}

TEST_CASE("formatting helpers") {
  CHECK(io::format_omega(SpectralConstraint(12, {9, 1, 5})) == "1,5,9");
  CHECK(io::format_real(0.1) == "0.10000000000000001");
  CHECK(io::format_real(16) == "16");
}

TEST_CASE("bounds report JSON echoes the input") {
  bounds::BoundsInput in;
  in.L = 240;
  in.n = 15;
  in.M = 4;
  in.theta_max = 16;
  const auto j = nlohmann::json::parse(io::bounds_report_json(bounds::evaluate(in)));
  CHECK(j["input"]["L"] == 240);
  CHECK(j["input"]["theta_a"].is_null());
  CHECK(std::abs(j["theta_opti"].get<double>() - 14.0073) < 5e-4);
  CHECK(j["verdicts"]["theta_max"] == "asymptotically_optimal_candidate");
  CHECK(j["eta"].get<double>() > 1.14);
}
