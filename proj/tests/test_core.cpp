#include <cmath>
#include <numbers>

#include <stdexcept>

#include "doctest.h"
#include "scs/core.hpp"

using namespace scs;

TEST_CASE("ComplexSeq rejects empty input") {
  CHECK_THROWS_AS(ComplexSeq(Domain::time, {}), std::invalid_argument);
  ComplexSeq s(Domain::frequency, {Complex{1, 2}, Complex{3, 4}});
  CHECK(s.size() == 2);
  CHECK(s.domain() == Domain::frequency);
  CHECK(s[1] == Complex{3, 4});
  CHECK(std::string(to_string(Domain::time)) == "time");
}

TEST_CASE("energy and alphabet size") {
  ComplexSeq s(Domain::time, {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}, Complex{0, 0}});
  CHECK(energy(s) == doctest::Approx(4.0));
  CHECK(alphabet_size(s) == 4);
  // Phases just either side of the branch cut are the same symbol.
  ComplexSeq t(Domain::time, {std::polar(1.0, 1e-9), std::polar(1.0, 2 * std::numbers::pi - 1e-9)});
  CHECK(alphabet_size(t) == 1);
}

TEST_CASE("SpectralConstraint normalizes and validates") {
  SpectralConstraint c(12, {9, 1, 5, 1});
  CHECK(c.n() == 3);
  CHECK(std::vector<std::size_t>(c.forbidden().begin(), c.forbidden().end()) == std::vector<std::size_t>{1, 5, 9});
  CHECK(c.is_forbidden(5));
  CHECK_FALSE(c.is_forbidden(4));
  const auto mark = c.marking();
  CHECK(mark[1] == 0);
  CHECK(mark[0] == 1);
  CHECK(c.admissible_power() == doctest::Approx(12.0 / 9.0));
  CHECK(SpectralConstraint(240, {}).admissible_power() == doctest::Approx(1.0));

  CHECK_THROWS_AS(SpectralConstraint(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralConstraint(4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralConstraint(3, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("ScsFamily shape validation") {
  const ComplexSeq a(Domain::time, {1, 1, 1, 1});
  const ComplexSeq b(Domain::time, {1, -1, 1, -1});
  const ComplexSeq short_seq(Domain::time, {1, 1});
  const ComplexSeq freq(Domain::frequency, {1, 1, 1, 1});
  const SpectralConstraint c(4, {});

  ScsFamily f({{a, b}, {b}}, c, 2);
  CHECK(f.length() == 4);
  CHECK(f.set_count() == 2);
  CHECK(f.set_size() == 2);
  CHECK(f.sequence_count() == 3);
  const auto members = f.members();
  REQUIRE(members.size() == 3);
  CHECK(members[2][1] == Complex{-1, 0});

  CHECK_THROWS_AS(ScsFamily({{a, short_seq}}, c), std::invalid_argument);
  CHECK_THROWS_AS(ScsFamily({{freq}}, c), std::invalid_argument);
  CHECK_THROWS_AS(ScsFamily({{}}, c), std::invalid_argument);
  CHECK_THROWS_AS(ScsFamily({}, c), std::invalid_argument);
  CHECK_THROWS_AS(ScsFamily({{a}}, SpectralConstraint(5, {})), std::invalid_argument);
}

TEST_CASE("CorrelationProfile magnitudes") {
  CorrelationProfile p({Complex{3, 4}, Complex{0, -2}});
  CHECK(p.magnitudes() == std::vector<double>{5.0, 2.0});
  CHECK(p.max_magnitude() == doctest::Approx(5.0));
}
