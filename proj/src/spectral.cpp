#include "scs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace scs::spectral {

namespace {

void require_time(const ComplexSeq& s, const char* what) {
  if (s.domain() != Domain::time)
    throw std::invalid_argument(std::string(what) + " expects a time-domain sequence");
}

void require_same_length(const ComplexSeq& c, const ComplexSeq& d) {
  if (c.size() != d.size()) throw std::invalid_argument("correlation of sequences with different lengths");
}

// Unnormalized forward spectrum.
std::vector<Complex> raw_spectrum(const ComplexSeq& s) { return detail::fft(s.values(), -1); }

// θ_{c,d} from unnormalized spectra C, D: θ(τ) = (1/L) Σ_f C_f conj(D_f) ω^{-fτ}.
std::vector<Complex> correlate_spectra(std::span<const Complex> c, std::span<const Complex> d) {
  const std::size_t n = c.size();
  std::vector<Complex> x(n);
  for (std::size_t f = 0; f < n; ++f) x[f] = c[f] * std::conj(d[f]);
  auto theta = detail::fft(x, -1);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : theta) v *= scale;
  return theta;
}

// Calls visit(a, b, profile) for every a <= b, where profile = θ_{a,b}.
void for_each_pair(std::span<const ComplexSeq> seqs,
                   const std::function<void(std::size_t, std::size_t, std::span<const Complex>)>& visit) {
  std::vector<std::vector<Complex>> spectra;
  spectra.reserve(seqs.size());
  for (const auto& s : seqs) spectra.push_back(raw_spectrum(s));
  for (std::size_t a = 0; a < seqs.size(); ++a)
    for (std::size_t b = a; b < seqs.size(); ++b) visit(a, b, correlate_spectra(spectra[a], spectra[b]));
}

// |θ_{b,a}(τ)| = |θ_{a,b}(L-τ)|.
double reflected(std::span<const Complex> p, std::size_t tau) {
  const std::size_t n = p.size();
  return std::abs(p[(n - tau) % n]);
}

std::size_t first_nonzero(std::span<const Complex> p, std::size_t from, bool reflect, double tol) {
  for (std::size_t tau = from; tau < p.size(); ++tau) {
    const double m = reflect ? reflected(p, tau) : std::abs(p[tau]);
    if (m > tol) return tau;
  }
  return p.size();
}

void check_lengths(std::span<const ComplexSeq> seqs) {
  for (const auto& s : seqs) {
    require_time(s, "correlation");
    if (s.size() != seqs.front().size()) throw std::invalid_argument("sequences in a set differ in length");
  }
}

}  // namespace

ComplexSeq dft(const ComplexSeq& seq) {
  require_time(seq, "dft");
  auto out = detail::fft(seq.values(), -1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(seq.size()));
  for (auto& v : out) v *= scale;
  return ComplexSeq(Domain::frequency, std::move(out));
}

ComplexSeq idft(const ComplexSeq& seq) {
  if (seq.domain() != Domain::frequency) throw std::invalid_argument("idft expects a frequency-domain sequence");
  auto out = detail::fft(seq.values(), +1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(seq.size()));
  for (auto& v : out) v *= scale;
  return ComplexSeq(Domain::time, std::move(out));
}

CorrelationProfile pccf(const ComplexSeq& c, const ComplexSeq& d) {
  require_time(c, "pccf");
  require_time(d, "pccf");
  require_same_length(c, d);
  const std::size_t n = c.size();
  std::vector<Complex> theta(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    Complex acc{};
    for (std::size_t t = 0; t < n; ++t) acc += c[t] * std::conj(d[(t + tau) % n]);
    theta[tau] = acc;
  }
  return CorrelationProfile(std::move(theta));
}

CorrelationProfile pccf_fast(const ComplexSeq& c, const ComplexSeq& d) {
  require_time(c, "pccf_fast");
  require_time(d, "pccf_fast");
  require_same_length(c, d);
  return CorrelationProfile(correlate_spectra(raw_spectrum(c), raw_spectrum(d)));
}

FamilySummary summarize(const ScsFamily& family, std::optional<std::size_t> window, double zero_tol) {
  const std::size_t L = family.length();
  const std::size_t w = window.value_or(L);
  if (w < 1 || w > L) throw std::invalid_argument("correlation window must lie in [1, L]");

  const auto members = family.members();
  std::vector<std::size_t> set_of;
  for (std::size_t s = 0; s < family.set_count(); ++s)
    set_of.insert(set_of.end(), family.set(s).size(), s);

  FamilySummary out;
  out.window = w;
  out.sets.assign(family.set_count(), CorrelationSummary{0.0, 0.0, 0.0, w, L});
  out.interset_min = std::numeric_limits<double>::infinity();

  for_each_pair(members, [&](std::size_t a, std::size_t b, std::span<const Complex> p) {
    const std::size_t sa = set_of[a];
    const std::size_t sb = set_of[b];
    if (a == b) {
      auto& s = out.sets[sa];
      for (std::size_t tau = 1; tau < w; ++tau) s.theta_a = std::max(s.theta_a, std::abs(p[tau]));
      s.zcz_width = std::min(s.zcz_width, first_nonzero(p, 1, false, zero_tol));
      return;
    }
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t tau = 0; tau < w; ++tau) {
      const double fwd = std::abs(p[tau]);
      const double rev = reflected(p, tau);
      hi = std::max({hi, fwd, rev});
      lo = std::min({lo, fwd, rev});
    }
    if (sa == sb) {
      auto& s = out.sets[sa];
      s.theta_c = std::max(s.theta_c, hi);
      s.zcz_width = std::min({s.zcz_width, first_nonzero(p, 0, false, zero_tol),
                              first_nonzero(p, 0, true, zero_tol)});
    } else {
      out.has_interset = true;
      out.theta_c = std::max(out.theta_c, hi);
      out.interset_min = std::min(out.interset_min, lo);
    }
  });

  for (auto& s : out.sets) {
    s.theta_max = std::max(s.theta_a, s.theta_c);
    out.theta_a = std::max(out.theta_a, s.theta_max);
  }
  if (!out.has_interset) out.interset_min = 0.0;
  out.theta_max = std::max(out.theta_a, out.theta_c);
  return out;
}

std::size_t zcz_width(std::span<const ComplexSeq> set, double tol) {
  if (set.empty()) throw std::invalid_argument("zcz_width of an empty set");
  check_lengths(set);
  std::size_t z = set.front().size();
  for_each_pair(set, [&](std::size_t a, std::size_t b, std::span<const Complex> p) {
    if (a == b)
      z = std::min(z, first_nonzero(p, 1, false, tol));
    else
      z = std::min({z, first_nonzero(p, 0, false, tol), first_nonzero(p, 0, true, tol)});
  });
  return z;
}

SpectrumReport check_spectrum(const ComplexSeq& seq, const SpectralConstraint& constraint, double tol) {
  require_time(seq, "check_spectrum");
  if (seq.size() != constraint.length())
    throw std::invalid_argument("sequence length differs from constraint length");
  const auto spec = dft(seq);
  SpectrumReport r;
  r.admissible_power = constraint.admissible_power();
  r.power.resize(seq.size());
  for (std::size_t f = 0; f < seq.size(); ++f) {
    r.power[f] = std::norm(spec[f]);
    if (constraint.is_forbidden(f))
      r.max_leakage = std::max(r.max_leakage, r.power[f]);
    else
      r.max_deviation = std::max(r.max_deviation, std::abs(r.power[f] - r.admissible_power));
  }
  r.pass = r.max_leakage <= tol && r.max_deviation <= tol;
  return r;
}

bool check_unimodular(const ComplexSeq& seq, double tol) {
  require_time(seq, "check_unimodular");
  return std::all_of(seq.values().begin(), seq.values().end(),
                     [tol](Complex v) { return std::abs(std::abs(v) - 1.0) <= tol; });
}

SumOfSquares sum_of_squares_check(const ComplexSeq& c, const ComplexSeq& d,
                                  const SpectralConstraint& constraint, double rel_tol,
                                  double spectrum_tol) {
  SumOfSquares r;
  const double L = static_cast<double>(constraint.length());
  r.rhs = L * L * L / (L - static_cast<double>(constraint.n()));
  r.precondition_met = check_spectrum(c, constraint, spectrum_tol).pass &&
                       check_spectrum(d, constraint, spectrum_tol).pass;
  const auto profile = pccf_fast(c, d);
  for (const auto& v : profile.values()) r.lhs += std::norm(v);
  r.pass = r.precondition_met && std::abs(r.lhs - r.rhs) <= rel_tol * r.rhs;
  return r;
}

}  // namespace scs::spectral
