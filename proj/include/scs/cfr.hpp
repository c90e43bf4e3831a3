#pragma once

// Circular Florentine rectangles (CFRs).
//
// An r x N array whose rows are permutations of Z_N such that, for every step
// m != 0 (mod N), each ordered symbol pair (a, b) with b sitting m places to the
// right of a (cyclically) occurs in at most one row. The largest r for which
// such an array exists is 1 for even N and N-1 for prime N.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace scs {

using Permutation = std::vector<int>;

struct CfrViolation {
  enum class Kind { not_permutation, repeated_pair };
  Kind kind;
  int row_i = 0;
  int row_j = 0;
  int x = 0;
  int y = 0;
  int step = 0;  // m; unused for not_permutation
};

struct CfrVerdict {
  std::optional<CfrViolation> violation;
  bool ok() const { return !violation; }
};

/// Checks both axioms and reports one concrete violating tuple.
/// Throws std::invalid_argument for an empty, ragged or out-of-range matrix.
CfrVerdict verify_cfr(std::span<const Permutation> rows);

/// A verified CFR. Rows are only reachable through validated construction.
class Cfr {
 public:
  /// Throws std::invalid_argument if `rows` fails verify_cfr.
  explicit Cfr(std::vector<Permutation> rows);

  int order() const { return static_cast<int>(rows_.front().size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<Permutation>& rows() const { return rows_; }
  const Permutation& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }

  bool operator==(const Cfr&) const = default;

 private:
  std::vector<Permutation> rows_;
};

/// Multiplication table of Z_p without the zero row: row k-1 is x -> kx mod p.
/// Throws std::invalid_argument unless p is an odd prime.
Cfr cfr_from_prime(int p);

enum class SearchStatus { found, exhausted, budget_hit };

const char* to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status;
  std::optional<Cfr> cfr;
  std::uint64_t nodes = 0;
};

/// Depth-first search for an r x N CFR.
///
/// Row 0 is fixed to the identity and every row starts with 0; rows are kept in
/// increasing lexicographic order. The first solution found is therefore the
/// lexicographically smallest normalized CFR, and repeated calls with the same
/// arguments return the same matrix. A node is one successful cell placement;
/// placements that leave some empty cell of the row without a candidate are
/// undone immediately.
SearchResult search_cfr(int order, int rows, std::uint64_t node_budget);

/// |{t : π_i(t) = π_r(t + shift mod N)}|. Equal to 1 for every valid CFR.
/// Throws std::invalid_argument if i == r or an index is out of range.
int check_lemma4(const Cfr& cfr, int i, int r, int shift);

/// Row-wise inverses g_{i,j} = π_i^{-1}(j).
class InverseRows {
 public:
  explicit InverseRows(const Cfr& cfr);

  int order() const { return order_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<Permutation>& rows() const { return rows_; }
  int operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  /// Whether π_i^{-1} - π_r^{-1} (mod N) is a permutation of Z_N.
  bool difference_is_permutation(int i, int r) const;

 private:
  int order_;
  std::vector<Permutation> rows_;
};

inline InverseRows inverse_rows(const Cfr& cfr) { return InverseRows(cfr); }

Permutation invert(std::span<const int> perm);

/// Text format: first line "N r", then r lines of N space-separated integers.
std::string to_text(const Cfr& cfr);
/// Parses the text format into raw rows without checking the CFR axioms.
/// Throws std::invalid_argument on malformed input.
std::vector<Permutation> parse_cfr_rows(std::istream& in);
/// parse_cfr_rows followed by validation.
Cfr read_cfr(std::istream& in);

/// FNV-1a 64-bit hash of to_text(cfr), as 16 hex digits.
std::string fingerprint(const Cfr& cfr);

bool is_prime(int n);

}  // namespace scs
