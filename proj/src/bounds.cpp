#include "scs/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scs::bounds {

namespace {

void require_admissible(int L, int n) {
  if (L < 1) throw std::invalid_argument("sequence length must be positive");
  if (n < 0 || n >= L) throw std::invalid_argument("forbidden carrier count must satisfy 0 <= n < L");
}

// Lower-bound comparison with relative tolerance.
Verdict judge(double measured, double bound, double tol) {
  const double scale = std::max(1.0, std::abs(bound));
  if (measured < bound - tol * scale) return Verdict::violated;
  if (measured <= bound + tol * scale) return Verdict::optimal;
  return Verdict::suboptimal;
}

}  // namespace

TsaiCheck tsai_check(double theta_a, double theta_c, int L, int n, int M, int window, double tol) {
  require_admissible(L, n);
  if (window < 1) throw std::invalid_argument("window must be at least 1");
  if (M < 1) throw std::invalid_argument("set size must be at least 1");
  const double l = L;
  const double w = window;
  TsaiCheck r;
  r.lhs = (w - 1) * theta_a * theta_a + (M - 1) * w * theta_c * theta_c + l * l;
  r.rhs = M * l * l * w / (l - n);
  r.satisfied = r.lhs >= r.rhs - tol * r.rhs;
  return r;
}

std::optional<double> tsai_min_theta_a(double theta_c, int L, int n, int M, int window) {
  require_admissible(L, n);
  if (window <= 1) return std::nullopt;
  const double l = L;
  const double w = window;
  const double need = M * l * l * w / (l - n) - l * l - (M - 1) * w * theta_c * theta_c;
  return std::sqrt(std::max(0.0, need / (w - 1)));
}

std::optional<double> tsai_min_theta_c(double theta_a, int L, int n, int M, int window) {
  require_admissible(L, n);
  if (M <= 1 || window < 1) return std::nullopt;
  const double l = L;
  const double w = window;
  const double need = M * l * l * w / (l - n) - l * l - (w - 1) * theta_a * theta_a;
  return std::sqrt(std::max(0.0, need / ((M - 1) * w)));
}

std::optional<double> tsai_max_set_size(double theta_a, double theta_c, int L, int n, int window) {
  require_admissible(L, n);
  const double l = L;
  const double w = window;
  const double k = l * l * w / (l - n) - w * theta_c * theta_c;
  if (k <= 0) return std::nullopt;
  return ((w - 1) * theta_a * theta_a - w * theta_c * theta_c + l * l) / k;
}

std::optional<double> tsai_max_window(double theta_a, double theta_c, int L, int n, int M) {
  require_admissible(L, n);
  const double l = L;
  const double k = theta_a * theta_a + (M - 1) * theta_c * theta_c - M * l * l / (l - n);
  if (k >= 0) return std::nullopt;
  return (l * l - theta_a * theta_a) / -k;
}

const char* to_string(Tradeoff t) {
  switch (t) {
    case Tradeoff::optimal: return "optimal";
    case Tradeoff::feasible: return "feasible";
    case Tradeoff::infeasible: return "infeasible";
  }
  return "?";
}

Tradeoff zcz_tradeoff(int L, int n, int M, int Z) {
  if (L <= 0 || n < 0 || M <= 0 || Z <= 0) throw std::invalid_argument("zcz_tradeoff expects positive parameters");
  const long capacity = static_cast<long>(L) - n;
  const long demand = static_cast<long>(M) * Z;
  if (capacity == demand) return Tradeoff::optimal;
  return capacity > demand ? Tradeoff::feasible : Tradeoff::infeasible;
}

double liu_bound(int M, int L, int n) {
  require_admissible(L, n);
  const double l = L;
  const double m = M;
  if (m * l <= 1) throw std::invalid_argument("liu_bound requires M·L > 1");
  return l * std::sqrt(((m - 1) * l + n) / ((l - n) * (m * l - 1)));
}

ImprovedBounds improved_bounds(int L, int n) {
  require_admissible(L, n);
  if (L < 2) throw std::invalid_argument("improved_bounds requires L >= 2");
  const double l = L;
  return {l * std::sqrt(n / ((l - n) * (l - 1))), l / std::sqrt(l - n)};
}

CombinedCheck combined_inequality(double theta_a, double theta_c, int L, int n, int M, double tol) {
  require_admissible(L, n);
  const double l = L;
  CombinedCheck r;
  r.lhs = theta_a * theta_a * (l - 1) + theta_c * theta_c * (M - 1) * l;
  r.rhs = l * l * (M * l - l + n) / (l - n);
  r.slack = r.lhs - r.rhs;
  r.satisfied = r.slack >= -tol * std::max(1.0, r.rhs);
  return r;
}

double interset_bound(int L, int n) {
  require_admissible(L, n);
  return L / std::sqrt(static_cast<double>(L - n));
}

double optimality_factor(double theta_max, int M, int L, int n) {
  if (!(theta_max > 0)) throw std::invalid_argument("measured θ_max must be positive");
  return theta_max / liu_bound(M, L, n);
}

double cfr_family_optimality_factor(int N, int rows) {
  if (N < 2 || rows < 1) throw std::invalid_argument("cfr_family_optimality_factor expects N >= 2, rows >= 1");
  const double nn = static_cast<double>(N) * (N + 1);
  return std::sqrt((rows * nn - 1) / ((rows - 1) * nn + N));
}

DifferenceSetTheta difference_set_theta_a(int P, int N, int lambda) {
  if (P < 2 || N < 1 || N >= P) throw std::invalid_argument("difference_set_theta_a expects 1 <= N < P");
  if (lambda < 0 || lambda > N) throw std::invalid_argument("λ out of range");
  DifferenceSetTheta r;
  r.lambda_consistent = static_cast<long>(N) * (N - 1) == static_cast<long>(lambda) * (P - 1);
  r.theta_a = P * std::sqrt(static_cast<double>(N - lambda));
  r.bound = P * std::sqrt(static_cast<double>(N) * (P - N) / (P - 1));
  r.meets_bound = std::abs(r.theta_a - r.bound) <= kBoundTol * r.bound;
  return r;
}

LadderReport optimality_ladder(std::vector<LadderPoint> points) {
  LadderReport r;
  for (auto& p : points) p.eta = optimality_factor(p.theta_max, p.set_count, p.order * (p.order + 1), p.order);
  r.strictly_decreasing = !points.empty();
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i].eta < points[i - 1].eta)) r.strictly_decreasing = false;
  r.points = std::move(points);
  return r;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::optimal: return "optimal";
    case Verdict::asymptotically_optimal_candidate: return "asymptotically_optimal_candidate";
    case Verdict::suboptimal: return "suboptimal";
    case Verdict::violated: return "violated";
  }
  return "?";
}

BoundsReport evaluate(const BoundsInput& in, double tol) {
  require_admissible(in.L, in.n);
  if (in.M < 1 || in.K < 1) throw std::invalid_argument("M and K must be at least 1");
  const int window = in.window.value_or(in.L);
  if (window < 1 || window > in.L) throw std::invalid_argument("window must lie in [1, L]");
  const bool full_window = window == in.L;
  const int members = in.M * in.K;

  BoundsReport r;
  r.input = in;
  r.theta_opti = members * in.L > 1 ? liu_bound(members, in.L, in.n) : 0.0;
  const auto ib = improved_bounds(in.L, in.n);
  r.theta_a_lb = ib.theta_a_lb;
  r.theta_c_lb = ib.theta_c_lb;
  r.interset_lb = interset_bound(in.L, in.n);
  r.zcz_capacity = in.L - in.n;

  if (in.theta_a) r.tsai = tsai_check(*in.theta_a, in.theta_c.value_or(0.0), in.L, in.n, in.M, window, tol);
  if (in.zcz_width) r.zcz = zcz_tradeoff(in.L, in.n, in.M, *in.zcz_width);

  if (full_window) {
    if (in.theta_a) {
      const double cross = std::max(in.theta_c.value_or(0.0), in.interset.value_or(0.0));
      r.combined = combined_inequality(*in.theta_a, cross, in.L, in.n, members, tol);
      r.theta_a_verdict = judge(*in.theta_a, r.theta_a_lb, tol);
    }
    if (in.theta_max && *in.theta_max > 0 && r.theta_opti > 0) {
      r.eta = *in.theta_max / r.theta_opti;
      auto v = judge(*in.theta_max, r.theta_opti, tol);
      if (v == Verdict::suboptimal && judge(*in.theta_max, r.interset_lb, tol) == Verdict::optimal)
        v = Verdict::asymptotically_optimal_candidate;
      r.theta_max_verdict = v;
    }
    if (in.interset && in.K > 1) r.interset_verdict = judge(*in.interset, r.interset_lb, tol);
  }
  return r;
}

}  // namespace scs::bounds
