#include "scs/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "scs/spectral.hpp"

namespace scs::constructions {

namespace {

// ω_m^k with the exponent reduced first so large products stay exact.
Complex root_of_unity(long long k, long long m) {
  long long r = k % m;
  if (r < 0) r += m;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m));
}

void require_odd_order(const Cfr& cfr) {
  if (cfr.order() % 2 == 0)
    throw std::invalid_argument("construction requires odd N: an even-order circular Florentine rectangle has a single row");
}

ConstructionInfo make_info(std::string name, const Cfr& cfr, const FrameworkParams* params) {
  ConstructionInfo info;
  info.name = std::move(name);
  info.order = cfr.order();
  info.cfr_fingerprint = fingerprint(cfr);
  if (params) info.insert_set = params->insert_set();
  return info;
}

void validate_h(const ComplexMatrix& h, int order) {
  if (h.rows != order || h.cols != order || h.data.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("orthogonal matrix must be N x N");
  if (gram_offdiagonal(h) > 1e-9) throw std::invalid_argument("matrix H is not orthogonal (Gram deviation > 1e-9)");
  for (const auto& v : h.data)
    if (std::abs(std::abs(v) - 1.0) > 1e-9)
      throw std::invalid_argument("matrix H must have unimodular entries for uniform power allocation");
}

}  // namespace

FrameworkParams::FrameworkParams(int order, std::vector<int> insert_set)
    : order_(order), insert_(std::move(insert_set)) {
  if (order_ < 1) throw std::invalid_argument("framework order N must be positive");
  std::sort(insert_.begin(), insert_.end());
  if (std::adjacent_find(insert_.begin(), insert_.end()) != insert_.end())
    throw std::invalid_argument("insert set has repeated elements");
  if (insert_.empty()) throw std::invalid_argument("insert set must be nonempty");
  const int p = period();
  for (int s : insert_)
    if (s < 0 || s >= p)
      throw std::invalid_argument("insert position " + std::to_string(s) + " outside Z_" + std::to_string(p));
  for (int k = 0; k < p; ++k)
    if (!std::binary_search(insert_.begin(), insert_.end(), k)) columns_.push_back(k);
}

std::vector<std::size_t> FrameworkParams::omega() const {
  std::vector<std::size_t> out;
  for (int a = 0; a < order_; ++a)
    for (int s : insert_) out.push_back(static_cast<std::size_t>(s + a * period()));
  std::sort(out.begin(), out.end());
  return out;
}

SpectralConstraint FrameworkParams::constraint() const {
  return SpectralConstraint(static_cast<std::size_t>(length()), omega());
}

ComplexMatrix dft_matrix(int order) {
  if (order < 1) throw std::invalid_argument("DFT matrix order must be positive");
  ComplexMatrix h{order, order, std::vector<Complex>(static_cast<std::size_t>(order) * order)};
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) h(a, b) = root_of_unity(-static_cast<long long>(a) * b, order);
  return h;
}

double gram_offdiagonal(const ComplexMatrix& h) {
  double worst = 0.0;
  for (int a = 0; a < h.rows; ++a)
    for (int b = a + 1; b < h.rows; ++b) {
      Complex g{};
      for (int s = 0; s < h.cols; ++s) g += h(a, s) * std::conj(h(b, s));
      worst = std::max(worst, std::abs(g));
    }
  return worst;
}

BaseMatrix::BaseMatrix(int rows, int cols, std::vector<Complex> entries, std::vector<int> zero_columns)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), zero_columns_(std::move(zero_columns)) {
  if (rows_ < 1 || cols_ < 1 || entries_.size() != static_cast<std::size_t>(rows_) * cols_)
    throw std::invalid_argument("base matrix shape mismatch");
  for (int k : zero_columns_) {
    if (k < 0 || k >= cols_) throw std::invalid_argument("zero column out of range");
    for (int j = 0; j < rows_; ++j)
      if ((*this)(j, k) != Complex{}) throw std::invalid_argument("inserted column is not identically zero");
  }
}

std::vector<BaseMatrix> build_base_matrices(const InverseRows& inv, const FrameworkParams& params,
                                            const BaseVariant& variant, std::optional<int> rows) {
  const int n = params.order();
  if (inv.order() != n) throw std::invalid_argument("inverse rows and framework disagree on N");
  const int used = rows.value_or(inv.row_count());
  if (used < 1 || used > inv.row_count()) throw std::invalid_argument("requested more rows than the CFR has");
  const int p = params.period();
  const long long np = static_cast<long long>(n) * p;
  const double amp = std::sqrt(static_cast<double>(p) / n);
  const auto& cols = params.admissible_columns();

  std::vector<BaseMatrix> out;
  auto emit = [&](int i, auto&& entry) {
    std::vector<Complex> b(static_cast<std::size_t>(n) * p);
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t) b[static_cast<std::size_t>(j * p + cols[static_cast<std::size_t>(t)])] = entry(i, j, t);
    out.emplace_back(n, p, std::move(b), params.insert_set());
  };

  if (std::holds_alternative<TwistedVariant>(variant)) {
    // √(P/N) ω_N^{j g} ω_{NP}^{k g} = √(P/N) ω_{NP}^{(jP + k) g}
    for (int i = 0; i < used; ++i)
      emit(i, [&](int ii, int j, int t) {
        const long long g = inv(ii, t);
        const long long k = cols[static_cast<std::size_t>(t)];
        return amp * root_of_unity((static_cast<long long>(j) * p + k) * g, np);
      });
  } else {
    const auto& h = std::get<HadamardVariant>(variant).h;
    validate_h(h, n);
    for (int i = 0; i < used; ++i)
      for (int c = 0; c < n; ++c)
        emit(i, [&](int ii, int j, int t) {
          return amp * root_of_unity(static_cast<long long>(j) * inv(ii, t), n) * h(c, t);
        });
  }
  return out;
}

ComplexSeq interleave(const BaseMatrix& base) {
  return ComplexSeq(Domain::frequency, std::vector<Complex>(base.entries().begin(), base.entries().end()));
}

UnimodularityError::UnimodularityError(std::size_t set_, std::size_t member_, std::size_t index_, double magnitude_)
    : std::runtime_error("sequence " + std::to_string(set_) + "/" + std::to_string(member_) +
                         " is not unimodular: |u_" + std::to_string(index_) + "| = " + std::to_string(magnitude_)),
      set(set_), member(member_), index(index_), magnitude(magnitude_) {}

ScsFamily to_time_domain(const FrequencyFamily& freq, double tol) {
  std::vector<ScsFamily::Set> sets;
  sets.reserve(freq.sets.size());
  for (std::size_t s = 0; s < freq.sets.size(); ++s) {
    ScsFamily::Set out;
    for (std::size_t m = 0; m < freq.sets[s].size(); ++m) {
      auto u = spectral::idft(freq.sets[s][m]);
      if (freq.expect_unimodular) {
        std::size_t worst = 0;
        double dev = -1.0;
        for (std::size_t t = 0; t < u.size(); ++t) {
          const double d = std::abs(std::abs(u[t]) - 1.0);
          if (d > dev) {
            dev = d;
            worst = t;
          }
        }
        if (dev > tol) throw UnimodularityError(s, m, worst, std::abs(u[worst]));
      }
      out.push_back(std::move(u));
    }
    sets.push_back(std::move(out));
  }
  return ScsFamily(std::move(sets), freq.constraint, freq.alphabet_order, freq.info);
}

ScsFamily construction1(const Cfr& cfr) {
  require_odd_order(cfr);
  const int n = cfr.order();
  const long long q = n + 1;
  const std::size_t L = static_cast<std::size_t>(n) * (n + 1);
  std::vector<ScsFamily::Set> sets;
  for (const auto& row : cfr.rows()) {
    std::vector<Complex> c(L);
    for (std::size_t i = 0; i < L; ++i)
      c[i] = root_of_unity(static_cast<long long>(row[i % static_cast<std::size_t>(n)]) * static_cast<long long>(i), q);
    sets.push_back({ComplexSeq(Domain::time, std::move(c))});
  }
  std::vector<std::size_t> omega;
  for (int a = 0; a < n; ++a) omega.push_back(static_cast<std::size_t>(1 + a * (n + 1)));
  return ScsFamily(std::move(sets), SpectralConstraint(L, std::move(omega)), n + 1, make_info("c1", cfr, nullptr));
}

namespace {

ScsFamily twisted_family(const Cfr& cfr, const FrameworkParams& params, std::string name, std::optional<int> s0) {
  const auto bases = build_base_matrices(InverseRows(cfr), params, TwistedVariant{});
  FrequencyFamily freq{{}, params.constraint(), true, params.period(), make_info(std::move(name), cfr, &params)};
  freq.info->s0 = s0;
  for (const auto& b : bases) freq.sets.push_back({interleave(b)});
  return to_time_domain(freq);
}

}  // namespace

ScsFamily construction2(const Cfr& cfr, int s0) {
  require_odd_order(cfr);
  if (s0 < 0 || s0 > cfr.order()) throw std::invalid_argument("s0 must lie in Z_{N+1}");
  return twisted_family(cfr, FrameworkParams(cfr.order(), {s0}), "c2", s0);
}

ScsFamily construction3(const Cfr& cfr, std::vector<int> insert_set) {
  require_odd_order(cfr);
  FrameworkParams params(cfr.order(), std::move(insert_set));
  return twisted_family(cfr, params, "c3", std::nullopt);
}

ScsFamily construction4(const Cfr& cfr, const ComplexMatrix& h, std::vector<int> insert_set,
                        std::optional<int> set_count, std::string h_descriptor) {
  require_odd_order(cfr);
  FrameworkParams params(cfr.order(), std::move(insert_set));
  const int n = params.order();
  const int k = set_count.value_or(cfr.row_count());
  if (k < 1 || k > cfr.row_count()) throw std::invalid_argument("K must lie in [1, rows of the CFR]");
  const auto bases = build_base_matrices(InverseRows(cfr), params, HadamardVariant{h}, k);

  auto info = make_info("c4", cfr, &params);
  if (params.inserted() == 1) info.s0 = params.insert_set().front();
  info.h_descriptor = h_descriptor;
  // With the DFT matrix every entry is an (NP)-th root of unity.
  std::optional<int> alphabet;
  if (h_descriptor == "dft") alphabet = params.length();
  FrequencyFamily freq{{}, params.constraint(), false, alphabet, std::move(info)};
  for (int i = 0; i < k; ++i) {
    ScsFamily::Set set;
    for (int c = 0; c < n; ++c) set.push_back(interleave(bases[static_cast<std::size_t>(i * n + c)]));
    freq.sets.push_back(std::move(set));
  }
  return to_time_domain(freq);
}

ScsFamily construction4(const Cfr& cfr, std::vector<int> insert_set, std::optional<int> set_count) {
  return construction4(cfr, dft_matrix(cfr.order()), std::move(insert_set), set_count, "dft");
}

DifferenceSetVerdict verify_difference_set(std::span<const int> elements, int modulus) {
  if (modulus < 2) throw std::invalid_argument("difference set modulus must be at least 2");
  if (elements.empty()) throw std::invalid_argument("difference set must be nonempty");
  std::vector<bool> in(static_cast<std::size_t>(modulus), false);
  for (int d : elements) {
    if (d < 0 || d >= modulus) throw std::invalid_argument("difference set element outside Z_v");
    in[static_cast<std::size_t>(d)] = true;
  }
  DifferenceSetVerdict r;
  r.k = static_cast<int>(std::count(in.begin(), in.end(), true));
  for (int e = 1; e < modulus; ++e) {
    int count = 0;
    for (int d = 0; d < modulus; ++d)
      if (in[static_cast<std::size_t>(d)] && in[static_cast<std::size_t>((d + e) % modulus)]) ++count;
    r.difference_function.push_back(count);
  }
  const bool constant = std::adjacent_find(r.difference_function.begin(), r.difference_function.end(),
                                           std::not_equal_to<>()) == r.difference_function.end();
  r.is_difference_set = constant;
  if (constant) r.lambda = r.difference_function.front();
  return r;
}

CyclicDifferenceSet qr_difference_set(int p) {
  if (!is_prime(p) || p % 4 != 3) throw std::invalid_argument("quadratic residue difference sets need a prime p ≡ 3 (mod 4)");
  std::vector<bool> residue(static_cast<std::size_t>(p), false);
  for (long long x = 1; x < p; ++x) residue[static_cast<std::size_t>(x * x % p)] = true;
  CyclicDifferenceSet ds;
  ds.modulus = p;
  for (int x = 1; x < p; ++x)
    if (residue[static_cast<std::size_t>(x)]) ds.elements.push_back(x);
  ds.k = (p - 1) / 2;
  ds.lambda = (p - 3) / 4;
  return ds;
}

std::vector<int> complement(std::span<const int> keep, int modulus) {
  std::vector<int> out;
  for (int x = 0; x < modulus; ++x)
    if (std::find(keep.begin(), keep.end(), x) == keep.end()) out.push_back(x);
  return out;
}

}  // namespace scs::constructions
