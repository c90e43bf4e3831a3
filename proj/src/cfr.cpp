#include "scs/cfr.hpp"

#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace scs {

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

void check_shape(std::span<const Permutation> rows) {
  if (rows.empty()) throw std::invalid_argument("CFR has no rows");
  const std::size_t n = rows.front().size();
  if (n < 1) throw std::invalid_argument("CFR rows are empty");
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("CFR matrix is ragged");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("CFR entry " + std::to_string(v) + " outside Z_" + std::to_string(n));
  }
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Permutation invert(std::span<const int> perm) {
  Permutation inv(perm.size(), -1);
  for (std::size_t x = 0; x < perm.size(); ++x) inv[static_cast<std::size_t>(perm[x])] = static_cast<int>(x);
  return inv;
}

CfrVerdict verify_cfr(std::span<const Permutation> rows) {
  check_shape(rows);
  const int n = static_cast<int>(rows.front().size());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> seen(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      int& first = seen[static_cast<std::size_t>(rows[i][static_cast<std::size_t>(x)])];
      if (first >= 0) {
        return {CfrViolation{CfrViolation::Kind::not_permutation, static_cast<int>(i),
                             static_cast<int>(i), first, x, 0}};
      }
      first = x;
    }
  }

  // owner[a*n+b] = (row, position) of the first occurrence of pair (a, b) at step m.
  std::vector<std::pair<int, int>> owner(static_cast<std::size_t>(n) * n);
  for (int m = 1; m < n; ++m) {
    std::fill(owner.begin(), owner.end(), std::pair{-1, -1});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      for (int x = 0; x < n; ++x) {
        const int a = row[static_cast<std::size_t>(x)];
        const int b = row[static_cast<std::size_t>((x + m) % n)];
        auto& o = owner[static_cast<std::size_t>(a * n + b)];
        if (o.first >= 0) {
          return {CfrViolation{CfrViolation::Kind::repeated_pair, o.first, static_cast<int>(i),
                               o.second, x, m}};
        }
        o = {static_cast<int>(i), x};
      }
    }
  }
  return {};
}

Cfr::Cfr(std::vector<Permutation> rows) : rows_(std::move(rows)) {
  const auto verdict = verify_cfr(rows_);
  if (!verdict.ok()) {
    const auto& v = *verdict.violation;
    if (v.kind == CfrViolation::Kind::not_permutation)
      throw std::invalid_argument("row " + std::to_string(v.row_i) + " is not a permutation");
    throw std::invalid_argument("rows " + std::to_string(v.row_i) + " and " + std::to_string(v.row_j) +
                                " repeat a symbol pair at step " + std::to_string(v.step));
  }
}

Cfr cfr_from_prime(int p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  std::vector<Permutation> rows;
  rows.reserve(static_cast<std::size_t>(p - 1));
  for (int k = 1; k < p; ++k) {
    Permutation row(static_cast<std::size_t>(p));
    for (int x = 0; x < p; ++x) row[static_cast<std::size_t>(x)] = (k * x) % p;
    rows.push_back(std::move(row));
  }
  return Cfr(std::move(rows));
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget_hit: return "budget_hit";
  }
  return "?";
}

namespace {

class CfrSearch {
 public:
  CfrSearch(int n, int r, std::uint64_t budget)
      : n_(n), r_(r), budget_(budget),
        grid_(static_cast<std::size_t>(r), Permutation(static_cast<std::size_t>(n), -1)),
        used_pair_(static_cast<std::size_t>(n) * n * n, false),
        used_value_(static_cast<std::size_t>(n), false) {}

  SearchResult run() {
    for (int x = 0; x < n_; ++x) grid_[0][static_cast<std::size_t>(x)] = x;
    mark_row(0, true);
    if (r_ == 1) return finish(true);
    const bool found = fill(1, 0);
    return finish(found);
  }

 private:
  std::size_t key(int m, int a, int b) const {
    return (static_cast<std::size_t>(m) * n_ + a) * n_ + b;
  }

  void mark_row(int i, bool v) {
    const auto& row = grid_[static_cast<std::size_t>(i)];
    for (int m = 1; m < n_; ++m)
      for (int x = 0; x < n_; ++x)
        used_pair_[key(m, row[x], row[(x + m) % n_])] = v;
  }

  // Pairs created by placing `v` at position x against every y < x of the same
  // row: (row[y], v) at step x-y and, cyclically, (v, row[y]) at step N-(x-y).
  bool placeable(const Permutation& row, int x, int v) const { return placeable_against(row, x, x, v); }

  // Whether `v` at position x is compatible with the entries at positions < filled.
  bool placeable_against(const Permutation& row, int filled, int x, int v) const {
    for (int y = 0; y < filled; ++y) {
      const int a = row[static_cast<std::size_t>(y)];
      const int m = x - y;
      if (used_pair_[key(m, a, v)] || used_pair_[key(n_ - m, v, a)]) return false;
    }
    return true;
  }

  // Forward check: every empty position of the row still has a candidate.
  bool viable(const Permutation& row, int filled) const {
    for (int x = filled; x < n_; ++x) {
      bool any = false;
      for (int v = 1; v < n_ && !any; ++v)
        any = !used_value_[static_cast<std::size_t>(v)] && placeable_against(row, filled, x, v);
      if (!any) return false;
    }
    return true;
  }

  void set_pairs(const Permutation& row, int x, int v, bool on) {
    for (int y = 0; y < x; ++y) {
      const int a = row[static_cast<std::size_t>(y)];
      const int m = x - y;
      used_pair_[key(m, a, v)] = on;
      used_pair_[key(n_ - m, v, a)] = on;
    }
  }

  bool fill(int i, int x) {
    auto& row = grid_[static_cast<std::size_t>(i)];
    if (x == 0) {
      row[0] = 0;
      used_value_.assign(static_cast<std::size_t>(n_), false);
      used_value_[0] = true;
      return fill(i, 1);
    }
    if (x == n_) {
      if (i + 1 == r_) return true;
      const auto saved = used_value_;
      if (fill(i + 1, 0)) return true;
      used_value_ = saved;
      return false;
    }
    // Row order: rows start with 0 and their second entries are pairwise
    // distinct, so lexicographic order is decided at position 1.
    const int lo = (x == 1) ? grid_[static_cast<std::size_t>(i - 1)][1] + 1 : 1;
    for (int v = lo; v < n_; ++v) {
      if (used_value_[static_cast<std::size_t>(v)] || !placeable(row, x, v)) continue;
      if (nodes_ >= budget_) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      row[static_cast<std::size_t>(x)] = v;
      used_value_[static_cast<std::size_t>(v)] = true;
      set_pairs(row, x, v, true);
      if (viable(row, x + 1) && fill(i, x + 1)) return true;
      set_pairs(row, x, v, false);
      used_value_[static_cast<std::size_t>(v)] = false;
      row[static_cast<std::size_t>(x)] = -1;
      if (budget_hit_) return false;
    }
    return false;
  }

  SearchResult finish(bool found) {
    if (found) return {SearchStatus::found, Cfr(grid_), nodes_};
    return {budget_hit_ ? SearchStatus::budget_hit : SearchStatus::exhausted, std::nullopt, nodes_};
  }

  int n_;
  int r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<Permutation> grid_;
  std::vector<bool> used_pair_;
  std::vector<bool> used_value_;
};

}  // namespace

SearchResult search_cfr(int order, int rows, std::uint64_t node_budget) {
  if (order < 2) throw std::invalid_argument("CFR order must be at least 2");
  if (rows < 1) throw std::invalid_argument("CFR row count must be at least 1");
  if (order > 256) throw std::invalid_argument("CFR search is limited to order <= 256");
  // No two rows can share their second entry and row 0 uses 1, so r > N - 1
  // is impossible; the search proves that on its own.
  return CfrSearch(order, rows, node_budget).run();
}

int check_lemma4(const Cfr& cfr, int i, int r, int shift) {
  if (i == r) throw std::invalid_argument("check_lemma4 requires two distinct rows");
  if (i < 0 || r < 0 || i >= cfr.row_count() || r >= cfr.row_count())
    throw std::invalid_argument("row index out of range");
  const int n = cfr.order();
  if (shift < 0 || shift >= n) throw std::invalid_argument("shift out of range");
  const auto& a = cfr.row(i);
  const auto& b = cfr.row(r);
  int count = 0;
  for (int t = 0; t < n; ++t)
    if (a[static_cast<std::size_t>(t)] == b[static_cast<std::size_t>((t + shift) % n)]) ++count;
  return count;
}

InverseRows::InverseRows(const Cfr& cfr) : order_(cfr.order()) {
  rows_.reserve(static_cast<std::size_t>(cfr.row_count()));
  for (const auto& row : cfr.rows()) rows_.push_back(invert(row));
}

bool InverseRows::difference_is_permutation(int i, int r) const {
  std::vector<bool> hit(static_cast<std::size_t>(order_), false);
  for (int j = 0; j < order_; ++j) {
    const int d = mod((*this)(i, j) - (*this)(r, j), order_);
    if (hit[static_cast<std::size_t>(d)]) return false;
    hit[static_cast<std::size_t>(d)] = true;
  }
  return true;
}

std::string to_text(const Cfr& cfr) {
  std::ostringstream os;
  os << cfr.order() << ' ' << cfr.row_count() << '\n';
  for (const auto& row : cfr.rows()) {
    for (std::size_t x = 0; x < row.size(); ++x) os << (x ? " " : "") << row[x];
    os << '\n';
  }
  return os.str();
}

std::vector<Permutation> parse_cfr_rows(std::istream& in) {
  long n = 0;
  long r = 0;
  if (!(in >> n >> r)) throw std::invalid_argument("CFR text: missing \"N r\" header");
  if (n < 1 || r < 1 || n > 100000 || r > 100000) throw std::invalid_argument("CFR text: bad dimensions");
  std::vector<Permutation> rows(static_cast<std::size_t>(r), Permutation(static_cast<std::size_t>(n)));
  for (auto& row : rows)
    for (auto& v : row)
      if (!(in >> v)) throw std::invalid_argument("CFR text: expected " + std::to_string(n * r) + " entries");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("CFR text: trailing data after the last row");
  return rows;
}

Cfr read_cfr(std::istream& in) { return Cfr(parse_cfr_rows(in)); }

std::string fingerprint(const Cfr& cfr) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : to_text(cfr)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace scs
