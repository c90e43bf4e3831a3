#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scs {

using Complex = std::complex<double>;

/// Default absolute tolerance for claims that a quantity is exactly zero.
inline constexpr double kZeroTol = 1e-9;

/// Which side of the DFT a sequence lives on. Transforms flip the tag.
enum class Domain { time, frequency };

const char* to_string(Domain d);

/// A length-L complex sequence tagged with its domain. Immutable.
class ComplexSeq {
 public:
  ComplexSeq(Domain domain, std::vector<Complex> values);

  Domain domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

 private:
  Domain domain_;
  std::vector<Complex> values_;
};

/// Sum of squared magnitudes.
double energy(const ComplexSeq& seq);

/// Number of distinct phases, with phases compared to within `tol` radians.
/// Zero entries are ignored.
std::size_t alphabet_size(const ComplexSeq& seq, double tol = 1e-6);

/// Forbidden-carrier set over Z_L. Stored sorted ascending, duplicates removed.
class SpectralConstraint {
 public:
  SpectralConstraint(std::size_t length, std::vector<std::size_t> forbidden);

  std::size_t length() const { return length_; }
  std::size_t n() const { return forbidden_.size(); }
  std::span<const std::size_t> forbidden() const { return forbidden_; }
  bool is_forbidden(std::size_t f) const;
  /// Carrier-marking vector: 0 on forbidden carriers, 1 elsewhere.
  std::vector<int> marking() const;
  /// |ĉ_f|² on every admissible carrier under uniform power allocation.
  double admissible_power() const;

  bool operator==(const SpectralConstraint&) const = default;

 private:
  std::size_t length_;
  std::vector<std::size_t> forbidden_;
};

/// Parameters a construction was run with, echoed into output files.
struct ConstructionInfo {
  std::string name;                 // "c1" .. "c4"
  int order = 0;                    // N
  std::vector<int> insert_set;      // I (empty for c1)
  std::optional<int> s0;
  std::string cfr_fingerprint;
  std::string h_descriptor;         // c4 only
};

/// K sets of M time-domain sequences sharing one spectral constraint.
///
/// Construction validates shape only (equal lengths, nonempty sets, constraint
/// length). The uniform-power condition is a property of the data and is
/// checked by spectral::check_spectrum, so a corrupted family can still be
/// loaded and reported on.
class ScsFamily {
 public:
  using Set = std::vector<ComplexSeq>;

  ScsFamily(std::vector<Set> sets, SpectralConstraint constraint,
            std::optional<int> alphabet_order = std::nullopt,
            std::optional<ConstructionInfo> info = std::nullopt);

  std::size_t length() const { return constraint_.length(); }
  std::size_t set_count() const { return sets_.size(); }
  /// Sequences per set (the largest set, if ragged).
  std::size_t set_size() const;
  std::size_t sequence_count() const;

  const std::vector<Set>& sets() const { return sets_; }
  const Set& set(std::size_t i) const { return sets_.at(i); }
  const SpectralConstraint& constraint() const { return constraint_; }
  const std::optional<int>& alphabet_order() const { return alphabet_order_; }
  const std::optional<ConstructionInfo>& info() const { return info_; }

  /// All member sequences, set-major.
  std::vector<ComplexSeq> members() const;

 private:
  std::vector<Set> sets_;
  SpectralConstraint constraint_;
  std::optional<int> alphabet_order_;
  std::optional<ConstructionInfo> info_;
};

/// θ(τ) for τ = 0..L-1.
class CorrelationProfile {
 public:
  explicit CorrelationProfile(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t tau) const { return values_[tau]; }
  std::vector<double> magnitudes() const;
  double max_magnitude() const;

 private:
  std::vector<Complex> values_;
};

struct CorrelationSummary {
  double theta_a = 0.0;
  double theta_c = 0.0;
  double theta_max = 0.0;
  std::size_t window = 0;
  std::size_t zcz_width = 0;
};

}  // namespace scs
