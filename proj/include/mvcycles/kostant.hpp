#pragma once

// Kostant pictures for type A_{n-1}: multisets of loops drawn around runs of
// consecutive Dynkin dots, plus the coweight / root-combination value types
// they are measured with.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mv {

/// Integer n-vector (λ, ν(w), μ^w(Y), δ(Y), ...). Entry i is column i+1.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::size_t n) : v_(n, 0) {}
  Coweight(std::initializer_list<int> xs) : v_(xs) {}
  explicit Coweight(std::vector<int> xs) : v_(std::move(xs)) {}

  std::size_t size() const { return v_.size(); }
  int& operator[](std::size_t i) { return v_[i]; }
  int operator[](std::size_t i) const { return v_[i]; }
  /// 1-based column access.
  int at_column(int col) const { return v_.at(static_cast<std::size_t>(col - 1)); }
  int& at_column(int col) { return v_.at(static_cast<std::size_t>(col - 1)); }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& entries() const { return v_; }
  std::vector<int>& entries_mut() { return v_; }

  long long total() const { return std::accumulate(v_.begin(), v_.end(), 0LL); }
  bool is_sl() const { return total() == 0; }

  Coweight& operator+=(const Coweight& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

 private:
  void check_size(const Coweight& o) const {
    if (o.size() != size()) throw std::invalid_argument("coweight size mismatch");
  }
  std::vector<int> v_;
};

/// Nonnegative-or-not combination of the simple roots α_1..α_{n-1}.
class RootCombination {
 public:
  RootCombination() = default;
  explicit RootCombination(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  RootCombination(std::initializer_list<int> xs) : c_(xs) {}

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t d) const { return c_[d]; }
  int& operator[](std::size_t d) { return c_[d]; }
  const std::vector<int>& coefficients() const { return c_; }
  long long height() const { return std::accumulate(c_.begin(), c_.end(), 0LL); }
  bool nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
  }

  /// Σ c_d (e_d − e_{d+1}) as an n-vector.
  Coweight as_coweight() const {
    Coweight w(c_.size() + 1);
    for (std::size_t d = 0; d < c_.size(); ++d) {
      w[d] += c_[d];
      w[d + 1] -= c_[d];
    }
    return w;
  }

  /// Inverse of as_coweight; throws when the coweight has nonzero total.
  static RootCombination from_coweight(const Coweight& w) {
    if (w.total() != 0) throw std::invalid_argument("coweight difference is not in the root lattice");
    std::vector<int> c(w.size() > 0 ? w.size() - 1 : 0);
    int run = 0;
    for (std::size_t d = 0; d + 1 < w.size(); ++d) {
      run += w[d];
      c[d] = run;
    }
    return RootCombination(std::move(c));
  }

  friend bool operator==(const RootCombination&, const RootCombination&) = default;

 private:
  std::vector<int> c_;
};

/// A loop passing through columns left..right; it encloses dots left..right-1.
/// `copy` orders loops with identical ends, copy 0 innermost.
struct Loop {
  int left = 1;
  int right = 2;
  int copy = 0;

  int length() const { return right - left; }
  bool passes_through(int col) const { return left <= col && col <= right; }
  bool same_interval(const Loop& o) const { return left == o.left && right == o.right; }

  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;

  std::string str() const {
    return "[" + std::to_string(left) + "," + std::to_string(right) + "]#" + std::to_string(copy);
  }
};

/// Strict encirclement: interval strictly contains, or equal interval and higher copy.
inline bool encircles(const Loop& outer, const Loop& inner) {
  if (outer.same_interval(inner)) return outer.copy > inner.copy;
  return outer.left <= inner.left && inner.right <= outer.right;
}

/// Loop `inner` is encircled by or equal to `outer` (L ⊆ L').
inline bool within(const Loop& inner, const Loop& outer) {
  return inner == outer || encircles(outer, inner);
}

class KostantPicture {
 public:
  KostantPicture() = default;
  explicit KostantPicture(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative column count");
  }

  /// Copy ordinals are assigned from list order among equal intervals.
  KostantPicture(int n, const std::vector<std::pair<int, int>>& intervals) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative column count");
    std::map<std::pair<int, int>, int> seen;
    loops_.reserve(intervals.size());
    for (auto [l, r] : intervals) {
      if (!(1 <= l && l < r && r <= n)) {
        throw std::invalid_argument("loop [" + std::to_string(l) + "," + std::to_string(r) +
                                    "] out of range for n=" + std::to_string(n));
      }
      loops_.push_back(Loop{l, r, seen[{l, r}]++});
    }
    std::sort(loops_.begin(), loops_.end());
  }

  /// Takes loops with explicit copy ordinals; they must be gapless per interval.
  static KostantPicture from_loops(int n, std::vector<Loop> loops) {
    KostantPicture p(n);
    std::sort(loops.begin(), loops.end());
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const Loop& L = loops[k];
      if (!(1 <= L.left && L.left < L.right && L.right <= n))
        throw std::invalid_argument("loop " + L.str() + " out of range");
      bool first = k == 0 || !loops[k - 1].same_interval(L);
      int expect = first ? 0 : loops[k - 1].copy + 1;
      if (L.copy != expect) throw std::invalid_argument("copy ordinals not gapless at " + L.str());
    }
    p.loops_ = std::move(loops);
    return p;
  }

  int n() const { return n_; }
  const std::vector<Loop>& loops() const { return loops_; }
  std::size_t size() const { return loops_.size(); }
  bool empty() const { return loops_.empty(); }

  /// len(p): sum of loop lengths.
  int length() const {
    int s = 0;
    for (const auto& L : loops_) s += L.length();
    return s;
  }

  std::vector<std::pair<int, int>> intervals() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(loops_.size());
    for (const auto& L : loops_) out.emplace_back(L.left, L.right);
    return out;
  }

  std::size_t index_of(const Loop& L) const {
    auto it = std::lower_bound(loops_.begin(), loops_.end(), L);
    if (it == loops_.end() || !(*it == L)) throw std::out_of_range("loop not in picture: " + L.str());
    return static_cast<std::size_t>(it - loops_.begin());
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < loops_.size(); ++i) {
      if (i) s += ",";
      s += "[" + std::to_string(loops_[i].left) + "," + std::to_string(loops_[i].right) + "]";
    }
    return s + "}/n=" + std::to_string(n_);
  }

  friend bool operator==(const KostantPicture&, const KostantPicture&) = default;
  friend auto operator<=>(const KostantPicture& a, const KostantPicture& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.loops_ <=> b.loops_;
  }

 private:
  int n_ = 0;
  std::vector<Loop> loops_;  // sorted by (left, right, copy)
};

/// Coefficient of α_d is the number of loops with left ≤ d < right.
inline RootCombination picture_weight(const KostantPicture& p) {
  std::vector<int> c(p.n() > 0 ? static_cast<std::size_t>(p.n() - 1) : 0, 0);
  for (const auto& L : p.loops())
    for (int d = L.left; d < L.right; ++d) ++c[static_cast<std::size_t>(d - 1)];
  return RootCombination(std::move(c));
}

struct SideCounts {
  Coweight left;   // l_i
  Coweight right;  // r_i
};

inline SideCounts side_counts(const KostantPicture& p) {
  SideCounts s{Coweight(static_cast<std::size_t>(p.n())), Coweight(static_cast<std::size_t>(p.n()))};
  for (const auto& L : p.loops()) {
    ++s.left.at_column(L.left);
    ++s.right.at_column(L.right);
  }
  return s;
}

/// Levels of the loops through column i, innermost level first; each level is
/// sorted left to right.
inline std::vector<std::vector<Loop>> levels_through_column(const KostantPicture& p, int col) {
  if (col < 1 || col > p.n()) throw std::out_of_range("column out of range");
  std::vector<Loop> q;
  for (const auto& L : p.loops())
    if (L.passes_through(col)) q.push_back(L);
  // Inner loops first: shorter intervals, then lower copies.
  std::sort(q.begin(), q.end(), [](const Loop& a, const Loop& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.left != b.left) return a.left < b.left;
    return a.copy < b.copy;
  });
  std::vector<int> level(q.size(), 1);
  int top = 0;
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (encircles(q[a], q[b])) level[a] = std::max(level[a], level[b] + 1);
    top = std::max(top, level[a]);
  }
  std::vector<std::vector<Loop>> out(static_cast<std::size_t>(top));
  for (std::size_t a = 0; a < q.size(); ++a) out[static_cast<std::size_t>(level[a] - 1)].push_back(q[a]);
  for (auto& lvl : out) {
    std::sort(lvl.begin(), lvl.end(), [](const Loop& a, const Loop& b) { return a.left < b.left; });
    for (std::size_t k = 1; k < lvl.size(); ++k) {
      if (!(lvl[k - 1].left < lvl[k].left && lvl[k - 1].right < lvl[k].right))
        throw std::logic_error("loops on one level are nested");
    }
  }
  return out;
}

/// Every picture of the given weight, each once, in a deterministic order.
/// Intervals are visited lexicographically; after the intervals with left end
/// d are fixed, dot d must be fully covered.
inline std::vector<KostantPicture> enumerate_pictures(int n, const RootCombination& weight) {
  if (n < 1 || weight.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("weight must have n-1 coefficients");
  if (!weight.nonnegative()) return {};
  std::vector<std::pair<int, int>> ivs;
  for (int l = 1; l < n; ++l)
    for (int r = l + 1; r <= n; ++r) ivs.emplace_back(l, r);

  std::vector<KostantPicture> out;
  std::vector<int> rem = weight.coefficients();
  std::vector<std::pair<int, int>> chosen;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ivs.size()) {
      out.emplace_back(n, chosen);
      return;
    }
    auto [l, r] = ivs[k];
    int cap = rem[static_cast<std::size_t>(l - 1)];
    for (int d = l; d < r; ++d) cap = std::min(cap, rem[static_cast<std::size_t>(d - 1)]);
    bool last_with_left = (r == n);
    for (int m = 0; m <= cap; ++m) {
      // The last interval starting at l must finish covering dot l.
      if (last_with_left && rem[static_cast<std::size_t>(l - 1)] != m) continue;
      for (int d = l; d < r; ++d) rem[static_cast<std::size_t>(d - 1)] -= m;
      for (int c = 0; c < m; ++c) chosen.emplace_back(l, r);
      self(self, k + 1);
      for (int c = 0; c < m; ++c) chosen.pop_back();
      for (int d = l; d < r; ++d) rem[static_cast<std::size_t>(d - 1)] += m;
    }
  };
  if (n == 1) {
    out.emplace_back(1);
    return out;
  }
  rec(rec, 0);
  return out;
}

/// Kostant partition function by dynamic programming over positive roots
/// (coin-change style), independent of enumerate_pictures.
inline std::uint64_t kostant_count(int n, const RootCombination& weight) {
  if (n < 1 || weight.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("weight must have n-1 coefficients");
  if (!weight.nonnegative()) return 0;
  const std::size_t dots = weight.size();
  // Mixed-radix index over all vectors 0 ≤ v ≤ weight.
  std::vector<std::size_t> stride(dots + 1, 1);
  for (std::size_t d = 0; d < dots; ++d) stride[d + 1] = stride[d] * static_cast<std::size_t>(weight[d] + 1);
  std::vector<std::uint64_t> ways(stride[dots], 0);
  ways[0] = 1;
  std::vector<int> v(dots);
  // Roots by decreasing length, so the DP does not mirror the lexicographic enumerator.
  for (int len = n - 1; len >= 1; --len) {
    for (int a = 0; a + len <= static_cast<int>(dots); ++a) {
      std::size_t step = 0;
      for (int d = a; d < a + len; ++d) step += stride[static_cast<std::size_t>(d)];
      for (std::size_t idx = 0; idx < ways.size(); ++idx) {
        std::size_t rest = idx;
        bool fits = true;
        for (std::size_t d = 0; d < dots; ++d) {
          v[d] = static_cast<int>(rest % static_cast<std::size_t>(weight[d] + 1));
          rest /= static_cast<std::size_t>(weight[d] + 1);
        }
        for (int d = a; d < a + len; ++d) fits = fits && v[static_cast<std::size_t>(d)] >= 1;
        if (fits) ways[idx] += ways[idx - step];
      }
    }
  }
  return ways.back();
}

}  // namespace mv
