#pragma once

// Periodic correlation lower bounds for spectrally constrained sequence sets
// and the checks that certify measured families against them.
//
// Notation: L sequence length, n = |Ω| forbidden carriers, M sequences per set,
// window = number of shifts of interest (L_CZ), Z = zero correlation zone width.

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scs::bounds {

/// Relative tolerance used when comparing measured correlations to bounds.
inline constexpr double kBoundTol = 1e-6;

struct TsaiCheck {
  double lhs = 0.0;  // (W-1)θ_a² + (M-1)Wθ_c² + L²
  double rhs = 0.0;  // M L² W / (L-n)
  bool satisfied = false;
};

/// Throws std::invalid_argument for n >= L or window < 1.
TsaiCheck tsai_check(double theta_a, double theta_c, int L, int n, int M, int window,
                     double tol = kBoundTol);

/// Design-space queries on the same inequality: given the other quantities,
/// the tightest admissible value of the remaining one. nullopt when the
/// inequality places no constraint on it.
std::optional<double> tsai_min_theta_a(double theta_c, int L, int n, int M, int window);
std::optional<double> tsai_min_theta_c(double theta_a, int L, int n, int M, int window);
std::optional<double> tsai_max_set_size(double theta_a, double theta_c, int L, int n, int window);
std::optional<double> tsai_max_window(double theta_a, double theta_c, int L, int n, int M);

enum class Tradeoff { optimal, feasible, infeasible };
const char* to_string(Tradeoff t);

/// (L - n) >= M Z: optimal on equality.
Tradeoff zcz_tradeoff(int L, int n, int M, int Z);

/// θ_opti = L sqrt(((M-1)L + n) / ((L-n)(ML-1))).
double liu_bound(int M, int L, int n);

struct ImprovedBounds {
  double theta_a_lb = 0.0;  // L sqrt(n / ((L-n)(L-1)))
  double theta_c_lb = 0.0;  // L / sqrt(L-n)
};
ImprovedBounds improved_bounds(int L, int n);

struct CombinedCheck {
  double lhs = 0.0;  // θ_a²(L-1) + θ_c²(M-1)L
  double rhs = 0.0;  // L²(ML - L + n)/(L-n)
  double slack = 0.0;
  bool satisfied = false;
};
CombinedCheck combined_inequality(double theta_a, double theta_c, int L, int n, int M,
                                  double tol = kBoundTol);

/// Inter-set cross-correlation floor L / sqrt(L-n).
double interset_bound(int L, int n);

/// η = θ_max / θ_opti.
double optimality_factor(double theta_max, int M, int L, int n);

/// η for the time-domain CFR family of order N with `rows` single-sequence
/// sets, where θ_max = N+1, L = N(N+1), n = N:
/// sqrt((F N(N+1) - 1) / ((F-1) N(N+1) + N)).
double cfr_family_optimality_factor(int N, int rows);

struct DifferenceSetTheta {
  double theta_a = 0.0;  // P sqrt(N - λ)
  double bound = 0.0;    // P sqrt(N(P-N)/(P-1))
  bool lambda_consistent = false;  // λ = N(N-1)/(P-1) exactly
  bool meets_bound = false;
};
DifferenceSetTheta difference_set_theta_a(int P, int N, int lambda);

struct LadderPoint {
  int order = 0;         // N
  int set_count = 0;     // K
  double theta_max = 0;  // measured
  double eta = 0;
};

struct LadderReport {
  std::vector<LadderPoint> points;
  bool strictly_decreasing = false;
};

/// Fills in η for each point (M = K, L = N(N+1), n = N) and checks the trend.
LadderReport optimality_ladder(std::vector<LadderPoint> points);

enum class Verdict { optimal, asymptotically_optimal_candidate, suboptimal, violated };
const char* to_string(Verdict v);

struct BoundsInput {
  int L = 0;
  int n = 0;
  int M = 1;  // sequences per set
  int K = 1;  // number of sets
  std::optional<int> window;
  std::optional<double> theta_a;   // measured max auto sidelobe
  std::optional<double> theta_c;   // measured intra-set cross maximum
  std::optional<double> theta_max; // measured, whole family
  std::optional<double> interset;  // measured inter-set θ_c
  std::optional<int> zcz_width;
};

struct BoundsReport {
  BoundsInput input;
  double theta_opti = 0.0;
  double theta_a_lb = 0.0;
  double theta_c_lb = 0.0;
  double interset_lb = 0.0;
  int zcz_capacity = 0;  // L - n
  std::optional<TsaiCheck> tsai;
  std::optional<CombinedCheck> combined;
  std::optional<Tradeoff> zcz;
  std::optional<double> eta;
  std::optional<Verdict> theta_max_verdict;
  std::optional<Verdict> interset_verdict;
  std::optional<Verdict> theta_a_verdict;
};

/// Evaluates every bound for the given parameters and issues verdicts for the
/// measured values that are present.
///
/// Per-set quantities (the window inequality, the ZCZ tradeoff) use M and the
/// intra-set θ_a / θ_c. Family-wide quantities (θ_opti, the combined
/// inequality, η) treat the K·M members as one set whose cross-correlation is
/// max(θ_c, inter-set θ_c); they are only judged when the window is all of L.
BoundsReport evaluate(const BoundsInput& in, double tol = kBoundTol);

}  // namespace scs::bounds
