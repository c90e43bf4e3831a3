#pragma once

// Unitary DFT, periodic correlation and spectrum checks.
//
// Conventions:
//   ĉ_f  = (1/√L) Σ_t c_t ω^{-ft},  ω = e^{2πi/L}
//   θ(τ) = Σ_t c_t conj(d_{(t+τ) mod L})
// The second form of θ, Σ_f ĉ_f conj(d̂_f) ω^{-fτ}, is what pccf_fast evaluates.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "scs/core.hpp"

namespace scs::spectral {

ComplexSeq dft(const ComplexSeq& seq);
ComplexSeq idft(const ComplexSeq& seq);

/// O(L²) direct evaluation of the time-domain definition.
CorrelationProfile pccf(const ComplexSeq& c, const ComplexSeq& d);

/// Same profile through the spectral product and one inverse transform.
CorrelationProfile pccf_fast(const ComplexSeq& c, const ComplexSeq& d);

struct FamilySummary {
  std::vector<CorrelationSummary> sets;
  double theta_a = 0.0;         // max over sets of θ_max(set)
  double theta_c = 0.0;         // inter-set cross-correlation maximum
  double interset_min = 0.0;    // inter-set minimum |θ| over the window
  double theta_max = 0.0;
  std::size_t window = 0;
  bool has_interset = false;
};

/// θ_a / θ_c / Z per set plus the inter-set maximum over 0 <= τ < window.
/// window defaults to L. Throws std::invalid_argument for window outside [1, L].
FamilySummary summarize(const ScsFamily& family, std::optional<std::size_t> window = std::nullopt,
                        double zero_tol = kZeroTol);

/// Largest Z such that auto sidelobes vanish for 0 < τ < Z and cross values
/// vanish for 0 <= τ < Z. Returns L when no nonzero value occurs at all.
std::size_t zcz_width(std::span<const ComplexSeq> set, double tol = kZeroTol);

struct SpectrumReport {
  std::vector<double> power;     // |ĉ_f|²
  double admissible_power = 0.0; // L/(L-n)
  double max_leakage = 0.0;      // max over Ω of |ĉ_f|²
  double max_deviation = 0.0;    // max over f ∉ Ω of ||ĉ_f|² - L/(L-n)|
  bool pass = false;
};

SpectrumReport check_spectrum(const ComplexSeq& seq, const SpectralConstraint& constraint,
                              double tol = kZeroTol);

bool check_unimodular(const ComplexSeq& seq, double tol = kZeroTol);

struct SumOfSquares {
  double lhs = 0.0;  // Σ_τ |θ_{c,d}(τ)|²
  double rhs = 0.0;  // L³/(L-n)
  bool precondition_met = false;
  bool pass = false;
};

/// Verifies Σ_τ |θ_{c,d}(τ)|² = L³/(L-n). pass requires both inputs to satisfy
/// the uniform-power condition (checked at `spectrum_tol`) and the two sides to
/// agree within `rel_tol`·rhs.
SumOfSquares sum_of_squares_check(const ComplexSeq& c, const ComplexSeq& d,
                                  const SpectralConstraint& constraint, double rel_tol = 1e-9,
                                  double spectrum_tol = kZeroTol);

}  // namespace scs::spectral
