#pragma once

// Sequence family constructions built from circular Florentine rectangles.
//
//   c1  time-domain: c^m_i = ω_{N+1}^{π_m(i mod N)·i}, L = N(N+1).
//   c2  frequency-domain interleaving with one zero column at s0 (T = 1).
//   c3  the same with an arbitrary insert set I, P = N + |I|.
//   c4  Hadamard product with the rows of an N×N orthogonal matrix H; yields
//       K sets of N sequences with a zero correlation zone of width N.
//
// The frequency-domain constructions share one framework: N×N matrices A^i
// are widened to N×P base matrices B^i by inserting zero columns at I, the
// rows of B^i are concatenated into a length-NP spectrum, and the spectrum is
// taken to the time domain with the unitary inverse DFT.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "scs/cfr.hpp"
#include "scs/core.hpp"

namespace scs::constructions {

/// N, the insert set I ⊂ Z_P, and everything derived from them.
class FrameworkParams {
 public:
  /// Throws std::invalid_argument unless N >= 1, I is nonempty, and every
  /// element of I lies in Z_P with P = N + |I|.
  FrameworkParams(int order, std::vector<int> insert_set);

  int order() const { return order_; }                       // N
  int inserted() const { return static_cast<int>(insert_.size()); }  // T
  int period() const { return order_ + inserted(); }          // P
  int length() const { return order_ * period(); }            // L
  const std::vector<int>& insert_set() const { return insert_; }
  /// l_0 < ... < l_{N-1}, the columns of Z_P outside I.
  const std::vector<int>& admissible_columns() const { return columns_; }
  /// {s + aP : s ∈ I, a ∈ Z_N}, sorted.
  std::vector<std::size_t> omega() const;
  SpectralConstraint constraint() const;

 private:
  int order_;
  std::vector<int> insert_;
  std::vector<int> columns_;
};

/// Row-major N×N complex matrix.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;

  Complex operator()(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
  Complex& operator()(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
};

/// h_{a,b} = ω_N^{-ab}: unimodular entries, orthogonal rows.
ComplexMatrix dft_matrix(int order);

/// Largest |(H H^†)_{a,b}| over a != b.
double gram_offdiagonal(const ComplexMatrix& h);

/// N×P base matrix with zero columns exactly at I.
class BaseMatrix {
 public:
  BaseMatrix(int rows, int cols, std::vector<Complex> entries, std::vector<int> zero_columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Complex operator()(int j, int k) const { return entries_[static_cast<std::size_t>(j * cols_ + k)]; }
  std::span<const Complex> entries() const { return entries_; }
  const std::vector<int>& zero_columns() const { return zero_columns_; }

 private:
  int rows_;
  int cols_;
  std::vector<Complex> entries_;
  std::vector<int> zero_columns_;
};

/// Base entries √(P/N) ω_N^{j g_{i,t}} ω_{NP}^{k g_{i,t}} at column k = l_t.
struct TwistedVariant {};

/// Base entries √(P/N) ω_N^{j g_{i,t}} h_{c,t} at column k = l_t, one matrix
/// per row c of H. H must be N×N with orthogonal, unimodular rows.
struct HadamardVariant {
  ComplexMatrix h;
};

using BaseVariant = std::variant<TwistedVariant, HadamardVariant>;

/// One matrix per CFR row for TwistedVariant; N matrices per CFR row (ordered
/// row-major by (i, c)) for HadamardVariant. Only the first `rows` CFR rows
/// are used when given.
std::vector<BaseMatrix> build_base_matrices(const InverseRows& inv, const FrameworkParams& params,
                                            const BaseVariant& variant,
                                            std::optional<int> rows = std::nullopt);

/// Concatenates the rows of the base matrix: û_n = b_{⌊n/P⌋, n mod P}.
ComplexSeq interleave(const BaseMatrix& base);

/// Frequency-domain family before the inverse transform.
struct FrequencyFamily {
  std::vector<std::vector<ComplexSeq>> sets;
  SpectralConstraint constraint;
  bool expect_unimodular = false;
  std::optional<int> alphabet_order;
  std::optional<ConstructionInfo> info;
};

struct UnimodularityError : std::runtime_error {
  UnimodularityError(std::size_t set, std::size_t member, std::size_t index, double magnitude);
  std::size_t set;
  std::size_t member;
  std::size_t index;  // worst offending time index
  double magnitude;
};

/// Applies the inverse DFT to every member. Throws UnimodularityError when the
/// family is expected to be unimodular and some |u_t| differs from 1 by more
/// than `tol`.
ScsFamily to_time_domain(const FrequencyFamily& freq, double tol = kZeroTol);

ScsFamily construction1(const Cfr& cfr);
ScsFamily construction2(const Cfr& cfr, int s0);
ScsFamily construction3(const Cfr& cfr, std::vector<int> insert_set);
/// K defaults to every CFR row. H is checked for orthogonality (Gram
/// off-diagonal <= 1e-9) and unimodular entries.
ScsFamily construction4(const Cfr& cfr, const ComplexMatrix& h, std::vector<int> insert_set,
                        std::optional<int> set_count = std::nullopt,
                        std::string h_descriptor = "custom");

/// Construction 4 with the default order-N DFT matrix.
ScsFamily construction4(const Cfr& cfr, std::vector<int> insert_set,
                        std::optional<int> set_count = std::nullopt);

struct CyclicDifferenceSet {
  int modulus = 0;
  std::vector<int> elements;
  int k = 0;
  int lambda = 0;
};

struct DifferenceSetVerdict {
  bool is_difference_set = false;
  int k = 0;
  std::optional<int> lambda;
  std::vector<int> difference_function;  // d_D(ε) for ε = 1..v-1
};

DifferenceSetVerdict verify_difference_set(std::span<const int> elements, int modulus);

/// Quadratic residues of a prime p ≡ 3 (mod 4): a (p, (p-1)/2, (p-3)/4) set.
CyclicDifferenceSet qr_difference_set(int p);

/// Z_P minus the given set, sorted; the insert set whose admissible columns are `keep`.
std::vector<int> complement(std::span<const int> keep, int modulus);

}  // namespace scs::constructions
