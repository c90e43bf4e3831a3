#include <cmath>

#include <stdexcept>

#include "doctest.h"
#include "scs/bounds.hpp"

using namespace scs::bounds;

TEST_CASE("correlation lower bound values") {
  CHECK(std::abs(liu_bound(4, 240, 15) - 14.0073) < 5e-4);
  CHECK(std::abs(liu_bound(7, 3306, 57) - 53.7758) < 5e-4);
  CHECK(std::abs(liu_bound(6, 2450, 49) - 45.7363) < 5e-4);
  CHECK_THROWS_AS(liu_bound(1, 10, 10), std::invalid_argument);
  CHECK_THROWS_AS(liu_bound(1, 1, 0), std::invalid_argument);

  const auto ib = improved_bounds(240, 15);
  CHECK(ib.theta_a_lb == doctest::Approx(4.00835946575336).epsilon(1e-12));
  CHECK(ib.theta_c_lb == doctest::Approx(16.0));
  CHECK(interset_bound(240, 15) == doctest::Approx(16.0));
  CHECK(interset_bound(55, 30) == doctest::Approx(11.0));
}

TEST_CASE("with no spectral holes the bounds reduce to the classical ones") {
  // n = 0: θ_a bound vanishes and θ_opti is the Welch-type L sqrt((M-1)/(ML-1)).
  const auto ib = improved_bounds(64, 0);
  CHECK(ib.theta_a_lb == doctest::Approx(0.0));
  CHECK(ib.theta_c_lb == doctest::Approx(8.0));
  CHECK(liu_bound(4, 64, 0) == doctest::Approx(64 * std::sqrt(3.0 / 255.0)));
}

TEST_CASE("optimality factor") {
  const double eta = optimality_factor(16, 4, 240, 15);
  CHECK(std::abs(eta - 1.1423) < 5e-4);
  CHECK(std::abs(16.0 / liu_bound(4, 240, 15) - eta) < 1e-15);
  CHECK(std::abs(50.0 / liu_bound(6, 2450, 49) - 1.0932) < 5e-4);
  for (int N : {5, 7, 11, 15, 49, 61})
    for (int F : {2, 4, 6}) {
      CAPTURE(N);
      CAPTURE(F);
      const double closed = cfr_family_optimality_factor(N, F);
      CHECK(closed == doctest::Approx(optimality_factor(N + 1, F, N * (N + 1), N)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(optimality_factor(0, 4, 240, 15), std::invalid_argument);
}

TEST_CASE("window inequality") {
  const auto t = tsai_check(16, 16, 240, 15, 4, 240);
  CHECK(t.lhs == doctest::Approx(303104));
  CHECK(t.rhs == doctest::Approx(245760));
  CHECK(t.satisfied);
  // A ZCZ set meeting the capacity exactly sits on the boundary.
  const auto z = tsai_check(0, 0, 240, 15, 15, 15);
  CHECK(z.lhs == doctest::Approx(z.rhs));
  CHECK(z.satisfied);
  CHECK_FALSE(tsai_check(0, 0, 240, 15, 15, 16).satisfied);
  CHECK_THROWS_AS(tsai_check(1, 1, 10, 10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(tsai_check(1, 1, 10, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("design-space solvers land on the boundary") {
  const int L = 240, n = 15, M = 4, W = 60;
  const auto a = tsai_min_theta_a(1, L, n, M, W);
  REQUIRE(a);
  const auto ta = tsai_check(*a, 1, L, n, M, W);
  CHECK(ta.lhs == doctest::Approx(ta.rhs));

  const auto c = tsai_min_theta_c(1, L, n, M, W);
  REQUIRE(c);
  const auto tc = tsai_check(1, *c, L, n, M, W);
  CHECK(tc.lhs == doctest::Approx(tc.rhs));

  const auto m = tsai_max_set_size(12, 12, L, n, W);
  REQUIRE(m);
  const double l = L;
  CHECK((W - 1) * 144.0 + (*m - 1) * W * 144.0 + l * l == doctest::Approx(*m * l * l * W / (l - n)));

  const auto w = tsai_max_window(12, 12, L, n, M);
  REQUIRE(w);
  CHECK((*w - 1) * 144.0 + (M - 1) * *w * 144.0 + l * l == doctest::Approx(M * l * l * *w / (l - n)));

  CHECK_FALSE(tsai_min_theta_a(10, L, n, M, 1));
  CHECK_FALSE(tsai_min_theta_c(10, L, n, 1, W));
  CHECK_FALSE(tsai_max_window(100, 100, L, n, M));
}

TEST_CASE("zero correlation zone tradeoff") {
  CHECK(zcz_tradeoff(240, 15, 15, 15) == Tradeoff::optimal);
  CHECK(zcz_tradeoff(240, 15, 15, 14) == Tradeoff::feasible);
  CHECK(zcz_tradeoff(240, 15, 15, 16) == Tradeoff::infeasible);
  CHECK(std::string(to_string(Tradeoff::optimal)) == "optimal");
  CHECK_THROWS_AS(zcz_tradeoff(240, 15, 0, 15), std::invalid_argument);
}

TEST_CASE("combined inequality") {
  const auto c = combined_inequality(16, 16, 240, 15, 4);
  CHECK(c.lhs == doctest::Approx(245504));
  CHECK(c.rhs == doctest::Approx(188160));
  CHECK(c.satisfied);
  CHECK(c.slack == doctest::Approx(245504 - 188160));
  CHECK_FALSE(combined_inequality(1, 1, 240, 15, 4).satisfied);
}

TEST_CASE("difference-set autocorrelation") {
  const auto d = difference_set_theta_a(11, 5, 2);
  CHECK(d.lambda_consistent);
  CHECK(d.meets_bound);
  CHECK(d.theta_a == doctest::Approx(11 * std::sqrt(3.0)));
  const auto e = difference_set_theta_a(7, 3, 1);
  CHECK(e.meets_bound);
  CHECK(e.theta_a == doctest::Approx(7 * std::sqrt(2.0)));
  const auto f = difference_set_theta_a(11, 5, 1);
  CHECK_FALSE(f.lambda_consistent);
  CHECK_FALSE(f.meets_bound);
  CHECK_THROWS_AS(difference_set_theta_a(5, 5, 1), std::invalid_argument);
}

TEST_CASE("optimality ladder") {
  std::vector<LadderPoint> pts;
  for (int N : {5, 7, 11, 13}) pts.push_back({N, N - 1, static_cast<double>(N + 1), 0});
  const auto r = optimality_ladder(pts);
  CHECK(r.strictly_decreasing);
  CHECK(r.points[0].eta > r.points[3].eta);
  pts.push_back({17, 16, 1000.0, 0});
  CHECK_FALSE(optimality_ladder(pts).strictly_decreasing);
  CHECK_FALSE(optimality_ladder({}).strictly_decreasing);
}

TEST_CASE("evaluate issues verdicts") {
  BoundsInput ex1;
  ex1.L = 240;
  ex1.n = 15;
  ex1.M = 1;
  ex1.K = 4;
  ex1.theta_a = 16;
  ex1.theta_max = 16;
  ex1.interset = 16;
  const auto r = evaluate(ex1);
  CHECK(std::abs(r.theta_opti - 14.0073) < 5e-4);
  REQUIRE(r.eta);
  CHECK(std::abs(*r.eta - 1.1423) < 5e-4);
  CHECK(r.theta_max_verdict == Verdict::asymptotically_optimal_candidate);
  CHECK(r.interset_verdict == Verdict::optimal);
  CHECK(r.theta_a_verdict == Verdict::suboptimal);
  REQUIRE(r.combined);
  CHECK(r.combined->satisfied);
  CHECK(r.zcz_capacity == 225);

  BoundsInput zcz;
  zcz.L = 240;
  zcz.n = 15;
  zcz.M = 15;
  zcz.K = 4;
  zcz.window = 15;
  zcz.theta_a = 0;
  zcz.theta_c = 0;
  zcz.zcz_width = 15;
  zcz.interset = 16;
  const auto z = evaluate(zcz);
  CHECK(z.zcz == Tradeoff::optimal);
  REQUIRE(z.tsai);
  CHECK(z.tsai->satisfied);
  CHECK_FALSE(z.combined);
  CHECK_FALSE(z.interset_verdict);

  BoundsInput low = ex1;
  low.theta_max = 10;
  CHECK(evaluate(low).theta_max_verdict == Verdict::violated);

  BoundsInput bad;
  bad.L = 10;
  bad.n = 10;
  CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);
  bad.n = 1;
  bad.window = 11;
  CHECK_THROWS_AS(evaluate(bad), std::invalid_argument);
  CHECK(std::string(to_string(Verdict::asymptotically_optimal_candidate)) == "asymptotically_optimal_candidate");
}
