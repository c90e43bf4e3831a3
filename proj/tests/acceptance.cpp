// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "scs/bounds.hpp"
#include "scs/cfr.hpp"
#include "scs/constructions.hpp"
#include "scs/spectral.hpp"

using namespace scs;

namespace {

Cfr fixture(const char* name) {
  std::ifstream in(std::string(SCS_FIXTURES) + "/" + name);
  return read_cfr(in);
}

std::vector<std::size_t> omega_of(const ScsFamily& f) {
  return {f.constraint().forbidden().begin(), f.constraint().forbidden().end()};
}

std::vector<std::size_t> progression(std::size_t start, std::size_t step, std::size_t count) {
  std::vector<std::size_t> v;
  for (std::size_t a = 0; a < count; ++a) v.push_back(start + a * step);
  return v;
}

double max_unimodular_deviation(const ScsFamily& f) {
  double dev = 0;
  for (const auto& s : f.members())
    for (const auto& v : s.values()) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
  return dev;
}

double max_power_deviation(const ScsFamily& f) {
  double dev = 0;
  for (const auto& s : f.members()) {
    const auto r = spectral::check_spectrum(s, f.constraint());
    dev = std::max({dev, r.max_deviation, r.max_leakage});
  }
  return dev;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs >= time_limit) {
    o.pass = false;
    o.detail += "; too slow";
  }
  std::printf("%s [%d] %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

bool sum_of_squares_all_pairs(const ScsFamily& f, double& worst) {
  const auto members = f.members();
  bool ok = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      const auto r = spectral::sum_of_squares_check(members[i], members[j], f.constraint(), 1e-9);
      worst = std::max(worst, std::abs(r.lhs - r.rhs) / r.rhs);
      ok &= r.pass;
    }
  return ok;
}

}  // namespace

int main() {
  const auto flo15 = fixture("flo15.txt");
  const auto flo5 = fixture("flo5.txt");

  criterion(1, "Example 1: construction 1 over the 4x15 CFR", 5.0, [&] {
    const auto f = constructions::construction1(flo15);
    const auto s = spectral::summarize(f);
    const bool length = f.length() == 240;
    const bool theta = std::abs(s.theta_max - 16.0) <= 1e-6;
    const bool omega = omega_of(f) == progression(1, 16, 15);
    const bool power = std::abs(f.constraint().admissible_power() - 16.0 / 15.0) <= 1e-9 &&
                       max_power_deviation(f) <= 1e-9;
    return Outcome{length && theta && omega && power,
                   "L=" + std::to_string(f.length()) + " theta_max=" + fmt("%.12g", s.theta_max) +
                       " omega=" + (omega ? "{1,17,...,225}" : "mismatch") +
                       " power dev=" + fmt("%.2e", max_power_deviation(f))};
  });

  criterion(2, "Example 2: construction 2, N=15, s0=7", 5.0, [&] {
    const auto f = constructions::construction2(flo15, 7);
    const auto s = spectral::summarize(f);
    const bool theta = std::abs(s.theta_max - 16.0) <= 1e-6;
    const bool omega = omega_of(f) == progression(7, 16, 15);
    const double dev = max_unimodular_deviation(f);
    return Outcome{theta && omega && dev <= 1e-9, "theta_max=" + fmt("%.12g", s.theta_max) + " omega=" +
                                                      (omega ? "{7,23,...,231}" : "mismatch") +
                                                      " max||u|-1|=" + fmt("%.2e", dev)};
  });

  criterion(3, "Example 3: construction 3, N=5, P=11", 1.0, [&] {
    const auto f = constructions::construction3(flo5, {0, 2, 6, 7, 8, 10});
    const auto s = spectral::summarize(f);
    double theta_a = 0;
    for (const auto& set : s.sets) theta_a = std::max(theta_a, set.theta_a);
    const std::vector<std::size_t> expected{0,  2,  6,  7,  8,  10, 11, 13, 17, 18, 19, 21, 22, 24, 28,
                                            29, 30, 32, 33, 35, 39, 40, 41, 43, 44, 46, 50, 51, 52, 54};
    const bool tc = std::abs(s.theta_c - 11.0) <= 1e-6;
    const bool ta = std::abs(theta_a - 11.0 * std::sqrt(3.0)) <= 1e-6;
    const bool omega = omega_of(f) == expected;
    return Outcome{tc && ta && omega, "theta_c=" + fmt("%.12g", s.theta_c) + " theta_a=" + fmt("%.12g", theta_a) +
                                          " omega " + (omega ? "matches" : "mismatch")};
  });

  criterion(4, "Example 4: construction 4, N=15, s0=4, DFT matrix", 60.0, [&] {
    const auto f = constructions::construction4(flo15, {4});
    bool zcz = f.set_count() == 4;
    std::string widths;
    for (const auto& set : f.sets()) {
      const auto z = spectral::zcz_width(set);
      widths += (widths.empty() ? "" : ",") + std::to_string(z);
      zcz &= set.size() == 15 && f.length() == 240 && z == 15 &&
             bounds::zcz_tradeoff(240, static_cast<int>(f.constraint().n()), 15, static_cast<int>(z)) ==
                 bounds::Tradeoff::optimal;
    }
    const auto s = spectral::summarize(f);
    const bool inter = s.has_interset && std::abs(s.theta_c - 16.0) <= 1e-6 && std::abs(s.interset_min - 16.0) <= 1e-6 &&
                       std::abs(bounds::interset_bound(240, 15) - 16.0) <= 1e-12;
    return Outcome{zcz && inter, "Z per set=" + widths + " L-n=" + std::to_string(240 - f.constraint().n()) +
                                     " inter-set |theta| in [" + fmt("%.9g", s.interset_min) + ", " +
                                     fmt("%.9g", s.theta_c) + "]"};
  });

  criterion(5, "Table II spot checks", 0, [&] {
    const double b15 = bounds::liu_bound(4, 240, 15);
    const double e15 = bounds::optimality_factor(16, 4, 240, 15);
    const double b49 = bounds::liu_bound(6, 2450, 49);
    const double e49 = bounds::optimality_factor(50, 6, 2450, 49);
    const bool ok = std::abs(b15 - 14.0073) <= 5e-4 && std::abs(e15 - 1.1423) <= 5e-4 &&
                    std::abs(b49 - 45.7363) <= 5e-4 && std::abs(e49 - 1.0932) <= 5e-4;
    return Outcome{ok, "N=15: " + fmt("%.4f", b15) + "/" + fmt("%.4f", e15) + "  N=49: " + fmt("%.4f", b49) + "/" +
                           fmt("%.4f", e49)};
  });

  criterion(6, "Sum-of-squares identity over all fixture families", 0, [&] {
    const std::vector<ScsFamily> families{
        constructions::construction1(flo15),          constructions::construction2(flo15, 7),
        constructions::construction3(flo5, {0, 2, 6, 7, 8, 10}), constructions::construction4(flo15, {4}),
        constructions::construction1(fixture("flo3.txt")), constructions::construction2(fixture("flo3.txt"), 0)};
    double worst = 0;
    bool ok = true;
    for (const auto& f : families) ok &= sum_of_squares_all_pairs(f, worst);
    return Outcome{ok, "max relative error " + fmt("%.2e", worst)};
  });

  criterion(7, "pccf_fast agrees with the O(L^2) oracle", 0, [&] {
    std::mt19937_64 rng(20240607);
    std::normal_distribution<double> g;
    auto random_seq = [&](std::size_t n) {
      std::vector<Complex> v(n);
      for (auto& x : v) x = {g(rng), g(rng)};
      return ComplexSeq(Domain::time, std::move(v));
    };
    double worst = 0;
    for (std::size_t L : {12u, 55u, 64u, 240u})
      for (int k = 0; k < 100; ++k) {
        const auto c = random_seq(L);
        const auto d = random_seq(L);
        const auto slow = spectral::pccf(c, d);
        const auto fast = spectral::pccf_fast(c, d);
        for (std::size_t t = 0; t < L; ++t) worst = std::max(worst, std::abs(slow[t] - fast[t]));
      }
    return Outcome{worst <= 1e-9, "max elementwise difference " + fmt("%.2e", worst)};
  });

  criterion(8, "CFR suite", 0, [&] {
    std::vector<Cfr> accepted;
    bool ok = true;
    std::string detail;
    for (const char* name : {"flo15.txt", "flo5.txt"}) {
      const auto c = fixture(name);
      ok &= verify_cfr(c.rows()).ok();
      accepted.push_back(c);
    }
    for (int p : {3, 5, 7, 11, 13}) {
      const auto c = cfr_from_prime(p);
      ok &= verify_cfr(c.rows()).ok();
      accepted.push_back(c);
    }
    for (const auto& c : accepted) {
      const InverseRows inv(c);
      for (int i = 0; i < c.row_count(); ++i)
        for (int r = 0; r < c.row_count(); ++r) {
          if (i == r) continue;
          for (int l = 0; l < c.order(); ++l) ok &= check_lemma4(c, i, r, l) == 1;
          ok &= inv.difference_is_permutation(i, r);
        }
    }
    const auto s9 = search_cfr(9, 2, 1'000'000);
    const bool found = s9.status == SearchStatus::found && s9.cfr && verify_cfr(s9.cfr->rows()).ok();
    const auto s3 = search_cfr(3, 3, 1'000'000);
    const bool none = s3.status == SearchStatus::exhausted;
    detail = std::to_string(accepted.size()) + " CFRs verified; 2x9 " + to_string(s9.status) + " in " +
             std::to_string(s9.nodes) + " nodes; 3x3 " + to_string(s3.status);
    return Outcome{ok && found && none, detail};
  });

  criterion(9, "Optimality factor decreases along the prime ladder", 0, [&] {
    std::vector<bounds::LadderPoint> points;
    for (int p : {5, 7, 11, 13, 31, 61}) {
      const auto f = constructions::construction1(cfr_from_prime(p));
      points.push_back({p, static_cast<int>(f.set_count()), spectral::summarize(f).theta_max, 0});
    }
    const auto r = bounds::optimality_ladder(points);
    std::string detail;
    for (const auto& pt : r.points) detail += "N=" + std::to_string(pt.order) + ":" + fmt("%.4f", pt.eta) + " ";
    const double last = r.points.back().eta;
    return Outcome{r.strictly_decreasing && last < 1.02, detail + (r.strictly_decreasing ? "decreasing" : "not decreasing")};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
