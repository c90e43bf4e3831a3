#include "scs/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scs {

const char* to_string(Domain d) { return d == Domain::time ? "time" : "frequency"; }

ComplexSeq::ComplexSeq(Domain domain, std::vector<Complex> values)
    : domain_(domain), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("sequence length must be at least 1");
}

double energy(const ComplexSeq& seq) {
  double e = 0.0;
  for (const auto& v : seq.values()) e += std::norm(v);
  return e;
}

std::size_t alphabet_size(const ComplexSeq& seq, double tol) {
  std::vector<double> phases;
  for (const auto& v : seq.values()) {
    if (std::abs(v) < kZeroTol) continue;
    double ph = std::arg(v);
    if (ph < 0) ph += 2 * std::numbers::pi;
    phases.push_back(ph);
  }
  if (phases.empty()) return 0;
  std::sort(phases.begin(), phases.end());
  std::size_t count = 1;
  for (std::size_t i = 1; i < phases.size(); ++i)
    if (phases[i] - phases[i - 1] > tol) ++count;
  // 0 and 2π are the same phase.
  if (count > 1 && phases.front() + 2 * std::numbers::pi - phases.back() <= tol) --count;
  return count;
}

SpectralConstraint::SpectralConstraint(std::size_t length, std::vector<std::size_t> forbidden)
    : length_(length), forbidden_(std::move(forbidden)) {
  std::sort(forbidden_.begin(), forbidden_.end());
  forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
  if (length_ == 0) throw std::invalid_argument("constraint length must be positive");
  if (!forbidden_.empty() && forbidden_.back() >= length_)
    throw std::invalid_argument("forbidden carrier index out of range");
  if (forbidden_.size() >= length_)
    throw std::invalid_argument("spectral constraint leaves no admissible carrier (n >= L)");
}

bool SpectralConstraint::is_forbidden(std::size_t f) const {
  return std::binary_search(forbidden_.begin(), forbidden_.end(), f);
}

std::vector<int> SpectralConstraint::marking() const {
  std::vector<int> d(length_, 1);
  for (auto f : forbidden_) d[f] = 0;
  return d;
}

double SpectralConstraint::admissible_power() const {
  return static_cast<double>(length_) / static_cast<double>(length_ - n());
}

ScsFamily::ScsFamily(std::vector<Set> sets, SpectralConstraint constraint,
                     std::optional<int> alphabet_order, std::optional<ConstructionInfo> info)
    : sets_(std::move(sets)),
      constraint_(std::move(constraint)),
      alphabet_order_(alphabet_order),
      info_(std::move(info)) {
  if (sets_.empty()) throw std::invalid_argument("family has no sets");
  for (const auto& s : sets_) {
    if (s.empty()) throw std::invalid_argument("family contains an empty set");
    for (const auto& seq : s) {
      if (seq.domain() != Domain::time)
        throw std::invalid_argument("family members must be time-domain sequences");
      if (seq.size() != constraint_.length())
        throw std::invalid_argument("family member length differs from constraint length");
    }
  }
  if (alphabet_order_ && *alphabet_order_ <= 0)
    throw std::invalid_argument("alphabet order must be positive");
}

std::size_t ScsFamily::set_size() const {
  std::size_t m = 0;
  for (const auto& s : sets_) m = std::max(m, s.size());
  return m;
}

std::size_t ScsFamily::sequence_count() const {
  std::size_t n = 0;
  for (const auto& s : sets_) n += s.size();
  return n;
}

std::vector<ComplexSeq> ScsFamily::members() const {
  std::vector<ComplexSeq> out;
  out.reserve(sequence_count());
  for (const auto& s : sets_) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<double> CorrelationProfile::magnitudes() const {
  std::vector<double> m(values_.size());
  std::transform(values_.begin(), values_.end(), m.begin(), [](Complex v) { return std::abs(v); });
  return m;
}

double CorrelationProfile::max_magnitude() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace scs
