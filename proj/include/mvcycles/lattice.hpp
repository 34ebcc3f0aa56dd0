#pragma once

// Points of the GL_n loop Grassmannian: t-stable subspaces Y with
// t^{hi} V ⊆ Y ⊆ t^{lo} V, stored as the reduced echelon basis of
// Y / t^{hi} V over the monomials t^j e_c, lo ≤ j < hi, ordered by (j, c).
// V is the span of the lattice's own columns, so intersections with a
// subset of columns are lattices of the same type.

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvcycles/field.hpp"
#include "mvcycles/kostant.hpp"
#include "mvcycles/polytope.hpp"
#include "mvcycles/term_vector.hpp"

namespace mv {

namespace detail {

/// Gauss–Jordan elimination in place. Coordinates are visited in `order`
/// (all of them, identity when null). Zero rows are dropped; the returned
/// pivots are listed row by row.
template <class F>
std::vector<std::size_t> rref(std::vector<std::vector<F>>& M, const std::vector<std::size_t>* order = nullptr) {
  std::vector<std::size_t> piv;
  if (M.empty()) return piv;
  const std::size_t W = M[0].size();
  std::size_t r = 0;
  for (std::size_t t = 0; t < W && r < M.size(); ++t) {
    const std::size_t c = order ? (*order)[t] : t;
    std::size_t s = r;
    while (s < M.size() && is_zero(M[s][c])) ++s;
    if (s == M.size()) continue;
    std::swap(M[s], M[r]);
    if (!(M[r][c] == F(1))) {
      F inv = F(1) / M[r][c];
      for (auto& x : M[r])
        if (!is_zero(x)) x *= inv;
    }
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || is_zero(M[i][c])) continue;
      F f = M[i][c];
      for (std::size_t j = 0; j < W; ++j)
        if (!is_zero(M[r][j])) M[i][j] -= f * M[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  M.resize(r);
  return piv;
}

}  // namespace detail

/// Raised when an operation needs the lattice to have a column it lacks.
struct ColumnError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class F>
class Lattice {
 public:
  using Row = std::vector<F>;

  /// underline(λ) on columns 1..n.
  static Lattice fixed_point(const Coweight& lambda) {
    std::vector<int> labels(lambda.size());
    std::iota(labels.begin(), labels.end(), 1);
    return fixed_point(std::move(labels), lambda.entries());
  }

  /// Span of t^j e_c for j ≥ -depth[c], on the given column labels.
  static Lattice fixed_point(std::vector<int> labels, const std::vector<int>& depth) {
    check_labels(labels);
    if (depth.size() != labels.size()) throw std::invalid_argument("fixed_point: size mismatch");
    const std::size_t k = labels.size();
    int lo = 0, hi = 0;
    if (k) {
      lo = INT_MAX;
      hi = INT_MIN;
      for (int d : depth) {
        lo = std::min(lo, -d);
        hi = std::max(hi, -d);
      }
    }
    std::vector<Row> rows;
    for (std::size_t c = 0; c < k; ++c)
      for (int j = -depth[c]; j < hi; ++j) {
        Row v(static_cast<std::size_t>(hi - lo) * k, F(0));
        v[static_cast<std::size_t>(j - lo) * k + c] = F(1);
        rows.push_back(std::move(v));
      }
    return Lattice(std::move(labels), lo, hi, std::move(rows));
  }

  /// Smallest lattice on columns 1..n containing the generators and t^{hi}X_0.
  /// Without an explicit window, hi is the first degree from which adding
  /// t^{hi}X_0 no longer changes the span.
  static Lattice from_generators(int n, const std::vector<TermVector>& gens,
                                 std::optional<std::pair<int, int>> window = std::nullopt) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    return from_generators(std::move(labels), gens, window);
  }

  static Lattice from_generators(std::vector<int> labels, const std::vector<TermVector>& gens,
                                 std::optional<std::pair<int, int>> window = std::nullopt) {
    check_labels(labels);
    std::vector<TermVector> live;
    for (const auto& g : gens) {
      for (const auto& [key, c] : g.terms())
        if (!std::binary_search(labels.begin(), labels.end(), key.second))
          throw ColumnError("generator uses column " + std::to_string(key.second) + " outside the lattice");
      if (!g.empty()) live.push_back(g);
    }
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    const int k = static_cast<int>(labels.size());
    int lo = INT_MAX, maxdeg = INT_MIN;
    for (const auto& g : live) {
      lo = std::min(lo, g.min_degree());
      maxdeg = std::max(maxdeg, g.max_degree());
    }
    if (live.empty()) {
      lo = window ? window->first : 0;
      maxdeg = lo - 1;
    }
    if (window) {
      if (window->first > lo || window->second < window->first)
        throw std::invalid_argument("window does not contain the generators");
      lo = window->first;
      auto rows = closure_rows(labels, live, lo, window->second);
      return Lattice(std::move(labels), lo, window->second, std::move(rows));
    }
    const int cap = maxdeg + 1 + k * (maxdeg - lo + 1) + 8;
    int H = std::max(maxdeg + 1, lo);
    auto rank_at = [&](int h) {
      auto rows = closure_rows(labels, live, lo, h);
      return detail::rref(rows).size();
    };
    std::size_t r = rank_at(H);
    for (;; ++H) {
      if (H > cap) throw std::invalid_argument("generators do not span a lattice (no t^N X_0 inside)");
      std::size_t r2 = rank_at(H + 1);
      if (r2 == r + static_cast<std::size_t>(k)) break;
      r = r2;
    }
    auto rows = closure_rows(labels, live, lo, H);
    return Lattice(std::move(labels), lo, H, std::move(rows));
  }

  /// Lattice spanned over C[t] by dense rows in window [lo, hi) plus t^{hi}V.
  static Lattice from_rows(std::vector<int> labels, int lo, int hi, std::vector<Row> rows, bool t_closed = false) {
    check_labels(labels);
    const std::size_t k = labels.size();
    const std::size_t W = static_cast<std::size_t>(hi - lo) * k;
    for (const auto& r : rows)
      if (r.size() != W) throw std::invalid_argument("from_rows: width mismatch");
    if (!t_closed) {
      std::vector<Row> all;
      for (const auto& r : rows)
        for (int s = 0; s < hi - lo; ++s) {
          Row v(W, F(0));
          bool any = false;
          for (std::size_t x = 0; x + static_cast<std::size_t>(s) * k < W; ++x)
            if (!is_zero(r[x])) {
              v[x + static_cast<std::size_t>(s) * k] = r[x];
              any = true;
            }
          if (!any) break;
          all.push_back(std::move(v));
        }
      rows = std::move(all);
    }
    return Lattice(std::move(labels), lo, hi, std::move(rows));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_) * labels_.size(); }

  /// δ by column position (1-based position p at index p-1).
  const Coweight& delta() const { return delta_; }

  int dim0() const {
    long long fixed = 0;
    for (int d : delta_) fixed += hi_ + d;
    return static_cast<int>(static_cast<long long>(rank()) - fixed);
  }

  long long relative_dimension() const {
    return static_cast<long long>(rank()) - static_cast<long long>(labels_.size()) * hi_;
  }

  /// 0-based position of a column label.
  std::size_t position_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) throw ColumnError("column " + std::to_string(label) + " not in lattice");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool member(const TermVector& v) const {
    Row d(width(), F(0));
    for (const auto& [key, c] : v.terms()) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), key.second);
      if (it == labels_.end() || *it != key.second) return false;
      if (key.first >= hi_) continue;
      if (key.first < lo_) return false;
      d[index(key.first, static_cast<std::size_t>(it - labels_.begin()))] += field_from<F>(c);
    }
    return reduces_to_zero(d);
  }

  /// Canonical representative of v modulo Y (exact rationals only).
  TermVector reduce(const TermVector& v) const {
    static_assert(std::is_same_v<F, Rational>, "reduce needs rational coefficients");
    TermVector out;
    Row d(width(), F(0));
    for (const auto& [key, c] : v.terms()) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), key.second);
      if (it == labels_.end() || *it != key.second || key.first < lo_) {
        out.add(c, key.first, key.second);
        continue;
      }
      if (key.first >= hi_) continue;
      d[index(key.first, static_cast<std::size_t>(it - labels_.begin()))] += c;
    }
    reduce_dense(d);
    for (std::size_t x = 0; x < d.size(); ++x)
      if (!is_zero(d[x])) out.add(d[x], degree_of(x), labels_[x % labels_.size()]);
    return out;
  }

  /// Echelon rows as term vectors (exact rationals only).
  std::vector<TermVector> basis_terms() const {
    static_assert(std::is_same_v<F, Rational>, "basis_terms needs rational coefficients");
    std::vector<TermVector> out;
    for (const auto& r : rows_) {
      TermVector v;
      for (std::size_t x = 0; x < r.size(); ++x)
        if (!is_zero(r[x])) v.add(r[x], degree_of(x), labels_[x % labels_.size()]);
      out.push_back(std::move(v));
    }
    return out;
  }

  /// Lowest degree j with t^j e_c in Proj_{V_c}(Y), c given by 0-based position.
  int min_projection_degree(std::size_t pos) const {
    const std::size_t k = labels_.size();
    int best = hi_;
    for (const auto& r : rows_)
      for (std::size_t x = pos; x < r.size(); x += k)
        if (!is_zero(r[x])) {
          best = std::min(best, degree_of(x));
          break;
        }
    return best;
  }

  /// Y ∩ V_P for 0-based positions P.
  Lattice intersect_positions(const std::vector<std::size_t>& P) const {
    const std::size_t k = labels_.size();
    std::vector<char> in(k, 0);
    for (auto p : P) {
      if (p >= k) throw ColumnError("position out of range");
      in[p] = 1;
    }
    std::vector<int> sub;
    std::vector<std::size_t> map(k, SIZE_MAX);
    for (std::size_t p = 0; p < k; ++p)
      if (in[p]) {
        map[p] = sub.size();
        sub.push_back(labels_[p]);
      }
    const std::size_t W = width();
    std::vector<std::size_t> order;
    order.reserve(W);
    for (std::size_t x = 0; x < W; ++x)
      if (!in[x % k]) order.push_back(x);
    const std::size_t split = order.size();
    for (std::size_t x = 0; x < W; ++x)
      if (in[x % k]) order.push_back(x);
    std::vector<std::size_t> rank_in_order(W);
    for (std::size_t t = 0; t < W; ++t) rank_in_order[order[t]] = t;
    auto M = rows_;
    auto piv = detail::rref(M, &order);
    const std::size_t ks = sub.size();
    std::vector<Row> kept;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (rank_in_order[piv[r]] < split) continue;
      Row v(static_cast<std::size_t>(hi_ - lo_) * ks, F(0));
      for (std::size_t x = 0; x < W; ++x)
        if (!is_zero(M[r][x])) v[(x / k) * ks + map[x % k]] = M[r][x];
      kept.push_back(std::move(v));
    }
    return Lattice(std::move(sub), lo_, hi_, std::move(kept));
  }

  /// Y ∩ V_I for column labels I.
  Lattice intersect_columns(const std::vector<int>& I) const {
    std::vector<std::size_t> P;
    for (int c : I) P.push_back(position_of(c));
    return intersect_positions(P);
  }

  /// Y ⊕ (span of t^j e_c, j ≥ −depth_c, over the added columns c), on a
  /// larger label set. depth lists one entry per label of `bigger`; entries
  /// for columns already present are ignored.
  Lattice embed(std::vector<int> bigger, const std::vector<int>& depth) const {
    check_labels(bigger);
    if (depth.size() != bigger.size()) throw std::invalid_argument("embed: depth size mismatch");
    const std::size_t k = labels_.size(), kb = bigger.size();
    std::vector<std::size_t> map(k);
    std::vector<char> old(kb, 0);
    for (std::size_t p = 0; p < k; ++p) {
      auto it = std::lower_bound(bigger.begin(), bigger.end(), labels_[p]);
      if (it == bigger.end() || *it != labels_[p]) throw ColumnError("embed target lacks a column");
      map[p] = static_cast<std::size_t>(it - bigger.begin());
      old[map[p]] = 1;
    }
    int lo2 = lo_, hi2 = hi_;
    for (std::size_t c = 0; c < kb; ++c)
      if (!old[c]) lo2 = std::min(lo2, -depth[c]), hi2 = std::max(hi2, -depth[c]);
    const std::size_t W2 = static_cast<std::size_t>(hi2 - lo2) * kb;
    std::vector<Row> rows;
    for (const auto& r : rows_in_window(lo2, hi2)) {
      Row v(W2, F(0));
      for (std::size_t x = 0; x < r.size(); ++x)
        if (!is_zero(r[x])) v[(x / k) * kb + map[x % k]] = r[x];
      rows.push_back(std::move(v));
    }
    for (std::size_t c = 0; c < kb; ++c)
      if (!old[c])
        for (int j = -depth[c]; j < hi2; ++j) {
          Row v(W2, F(0));
          v[static_cast<std::size_t>(j - lo2) * kb + c] = F(1);
          rows.push_back(std::move(v));
        }
    return Lattice(std::move(bigger), lo2, hi2, std::move(rows));
  }

  /// Same subspace with renamed columns; the new labels must be sorted.
  Lattice relabel(std::vector<int> fresh) const {
    check_labels(fresh);
    if (fresh.size() != labels_.size()) throw std::invalid_argument("relabel: size mismatch");
    Lattice out = *this;
    out.labels_ = std::move(fresh);
    return out;
  }

  /// t^s · Y.
  Lattice mul_t(int s) const {
    Lattice out = *this;
    out.lo_ += s;
    out.hi_ += s;
    for (auto& d : out.delta_.entries_mut()) d -= s;
    return out;
  }

  /// Multiplies column i by t^{-mu_i}.
  Lattice shift(const Coweight& mu) const {
    const std::size_t k = labels_.size();
    if (mu.size() != k) throw std::invalid_argument("shift: size mismatch");
    if (k == 0) return *this;
    int lo2 = INT_MAX, hi2 = INT_MIN;
    for (std::size_t c = 0; c < k; ++c) {
      lo2 = std::min(lo2, lo_ - mu[c]);
      hi2 = std::max(hi2, hi_ - mu[c]);
    }
    const std::size_t W2 = static_cast<std::size_t>(hi2 - lo2) * k;
    std::vector<Row> rows;
    for (const auto& r : rows_) {
      Row v(W2, F(0));
      for (std::size_t x = 0; x < r.size(); ++x)
        if (!is_zero(r[x])) {
          std::size_t c = x % k;
          v[static_cast<std::size_t>(degree_of(x) - mu[c] - lo2) * k + c] = r[x];
        }
      rows.push_back(std::move(v));
    }
    for (std::size_t c = 0; c < k; ++c)
      for (int j = hi_ - mu[c]; j < hi2; ++j) {
        Row v(W2, F(0));
        v[static_cast<std::size_t>(j - lo2) * k + c] = F(1);
        rows.push_back(std::move(v));
      }
    return Lattice(labels_, lo2, hi2, std::move(rows));
  }

  /// Rows re-expressed in a window containing this one, with the monomials
  /// between the old and new upper bounds made explicit.
  std::vector<Row> rows_in_window(int lo2, int hi2) const {
    if (lo2 > lo_ || hi2 < hi_) throw std::invalid_argument("window must contain the lattice window");
    const std::size_t k = labels_.size();
    const std::size_t W2 = static_cast<std::size_t>(hi2 - lo2) * k;
    const std::size_t off = static_cast<std::size_t>(lo_ - lo2) * k;
    std::vector<Row> out;
    for (const auto& r : rows_) {
      Row v(W2, F(0));
      for (std::size_t x = 0; x < r.size(); ++x) v[x + off] = r[x];
      out.push_back(std::move(v));
    }
    for (int j = hi_; j < hi2; ++j)
      for (std::size_t c = 0; c < k; ++c) {
        Row v(W2, F(0));
        v[static_cast<std::size_t>(j - lo2) * k + c] = F(1);
        out.push_back(std::move(v));
      }
    return out;
  }

  friend Lattice sum(const Lattice& a, const Lattice& b) {
    if (a.labels_ != b.labels_) throw ColumnError("sum: column sets differ");
    int lo2 = std::min(a.lo_, b.lo_), hi2 = std::max(a.hi_, b.hi_);
    auto rows = a.rows_in_window(lo2, hi2);
    auto rb = b.rows_in_window(lo2, hi2);
    rows.insert(rows.end(), std::make_move_iterator(rb.begin()), std::make_move_iterator(rb.end()));
    return Lattice(a.labels_, lo2, hi2, std::move(rows));
  }

  /// Zassenhaus intersection.
  friend Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.labels_ != b.labels_) throw ColumnError("intersect: column sets differ");
    int lo2 = std::min(a.lo_, b.lo_), hi2 = std::max(a.hi_, b.hi_);
    auto ra = a.rows_in_window(lo2, hi2);
    auto rb = b.rows_in_window(lo2, hi2);
    const std::size_t W = static_cast<std::size_t>(hi2 - lo2) * a.labels_.size();
    std::vector<Row> Z;
    for (auto& r : ra) {
      Row v(2 * W, F(0));
      std::copy(r.begin(), r.end(), v.begin());
      std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(W));
      Z.push_back(std::move(v));
    }
    for (auto& r : rb) {
      Row v(2 * W, F(0));
      std::copy(r.begin(), r.end(), v.begin());
      Z.push_back(std::move(v));
    }
    auto piv = detail::rref(Z);
    std::vector<Row> out;
    for (std::size_t r = 0; r < Z.size(); ++r)
      if (piv[r] >= W) out.emplace_back(Z[r].begin() + static_cast<std::ptrdiff_t>(W), Z[r].end());
    return Lattice(a.labels_, lo2, hi2, std::move(out));
  }

  /// Containment of subspaces with equal column sets. Normalized lattices
  /// compare structurally, so o ⊆ Y iff Y + o = Y.
  bool contains_lattice(const Lattice& o) const {
    if (labels_ != o.labels_) throw ColumnError("contains: column sets differ");
    return sum(*this, o) == *this;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.labels_ == b.labels_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.rows_ == b.rows_;
  }

  int degree_of(std::size_t x) const { return lo_ + static_cast<int>(x / labels_.size()); }
  std::size_t index(int degree, std::size_t pos) const {
    return static_cast<std::size_t>(degree - lo_) * labels_.size() + pos;
  }

  /// Coordinate order used by degenerate(): column priority first, then degree.
  std::vector<Row> rref_in_column_priority(const std::vector<std::size_t>& priority,
                                           std::vector<std::size_t>& pivots) const {
    const std::size_t k = labels_.size();
    const int span = hi_ - lo_;
    std::vector<std::size_t> order;
    for (std::size_t p : priority)
      for (int j = 0; j < span; ++j) order.push_back(static_cast<std::size_t>(j) * k + p);
    auto M = rows_;
    pivots = detail::rref(M, &order);
    return M;
  }

 private:
  Lattice(std::vector<int> labels, int lo, int hi, std::vector<Row> rows)
      : labels_(std::move(labels)), lo_(lo), hi_(hi), rows_(std::move(rows)) {
    piv_ = detail::rref(rows_);
    normalize();
  }

  static void check_labels(const std::vector<int>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 1) throw std::invalid_argument("column labels must be positive");
      if (i && labels[i - 1] >= labels[i]) throw std::invalid_argument("column labels must be strictly increasing");
    }
  }

  static std::vector<Row> closure_rows(const std::vector<int>& labels, const std::vector<TermVector>& gens, int lo,
                                       int hi) {
    const std::size_t k = labels.size();
    const std::size_t W = static_cast<std::size_t>(std::max(hi - lo, 0)) * k;
    std::vector<Row> rows;
    for (const auto& g : gens) {
      for (int s = 0; g.min_degree() + s < hi; ++s) {
        Row v(W, F(0));
        for (const auto& [key, c] : g.terms()) {
          int j = key.first + s;
          if (j >= hi) continue;
          std::size_t p = static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), key.second) -
                                                   labels.begin());
          v[static_cast<std::size_t>(j - lo) * k + p] += field_from<F>(c);
        }
        rows.push_back(std::move(v));
      }
    }
    return rows;
  }

  void reduce_dense(Row& d) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = piv_[r];
      if (is_zero(d[p])) continue;
      F f = d[p];
      const Row& row = rows_[r];
      for (std::size_t x = p; x < d.size(); ++x)
        if (!is_zero(row[x])) d[x] -= f * row[x];
    }
  }

  bool reduces_to_zero(Row d) const {
    reduce_dense(d);
    return std::all_of(d.begin(), d.end(), [](const F& x) { return is_zero(x); });
  }

  bool has_monomial(int degree, std::size_t pos) const {
    if (degree >= hi_) return true;
    if (degree < lo_) return false;
    Row d(width(), F(0));
    d[index(degree, pos)] = F(1);
    return reduces_to_zero(std::move(d));
  }

  /// Shrinks the window to [lowest pivot degree, max_c(-δ_c)) and fills δ.
  void normalize() {
    const std::size_t k = labels_.size();
    if (k == 0) {
      lo_ = hi_ = 0;
      rows_.clear();
      piv_.clear();
      delta_ = Coweight(std::size_t{0});
      return;
    }
    std::vector<int> d(k);
    for (std::size_t c = 0; c < k; ++c) {
      int a = lo_, b = hi_;  // has_monomial(b) is true
      while (a < b) {
        int m = a + (b - a) / 2;
        if (has_monomial(m, c))
          b = m;
        else
          a = m + 1;
      }
      d[c] = a;
    }
    int hi2 = *std::max_element(d.begin(), d.end());
    int lo2 = hi2;
    for (std::size_t r = 0; r < rows_.size(); ++r) lo2 = std::min(lo2, degree_of(piv_[r]));
    std::vector<Row> rows;
    std::vector<std::size_t> piv;
    const std::size_t W2 = static_cast<std::size_t>(hi2 - lo2) * k;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (degree_of(piv_[r]) >= hi2) continue;
      Row v(W2, F(0));
      for (std::size_t x = 0; x < rows_[r].size(); ++x) {
        int j = degree_of(x);
        if (j >= hi2 || is_zero(rows_[r][x])) continue;
        v[static_cast<std::size_t>(j - lo2) * k + x % k] = rows_[r][x];
      }
      piv.push_back(static_cast<std::size_t>(degree_of(piv_[r]) - lo2) * k + piv_[r] % k);
      rows.push_back(std::move(v));
    }
    rows_ = std::move(rows);
    piv_ = std::move(piv);
    lo_ = lo2;
    hi_ = hi2;
    std::vector<int> delta(k);
    for (std::size_t c = 0; c < k; ++c) delta[c] = -d[c];
    delta_ = Coweight(std::move(delta));
  }

  std::vector<int> labels_;
  int lo_ = 0;
  int hi_ = 0;
  std::vector<Row> rows_;
  std::vector<std::size_t> piv_;
  Coweight delta_;
};

using QLattice = Lattice<Rational>;

inline std::vector<std::size_t> positions_from_columns(const std::vector<int>& cols, int n) {
  std::vector<std::size_t> P;
  for (int c : cols) {
    if (c < 1 || c > n) throw ColumnError("column " + std::to_string(c) + " out of range");
    P.push_back(static_cast<std::size_t>(c - 1));
  }
  std::sort(P.begin(), P.end());
  if (std::adjacent_find(P.begin(), P.end()) != P.end()) throw std::invalid_argument("repeated column");
  return P;
}

/// d_I(Y) = dim_0(Y ∩ V_I), I given by 1-based positions.
template <class F>
int d_I(const Lattice<F>& Y, const std::vector<int>& I) {
  if (I.size() <= 1) {
    positions_from_columns(I, Y.n());
    return 0;
  }
  return Y.intersect_positions(positions_from_columns(I, Y.n())).dim0();
}

/// p(Y) from interval dimensions by inclusion–exclusion.
template <class F>
KostantPicture picture_of(const Lattice<F>& Y) {
  const int n = Y.n();
  // D[l][r] = dim_0(Y ∩ V_[l..r]); intervals of one column or none give 0.
  std::vector<std::vector<int>> D(static_cast<std::size_t>(n) + 2, std::vector<int>(static_cast<std::size_t>(n) + 2, 0));
  for (int l = 1; l <= n; ++l)
    for (int r = l + 1; r <= n; ++r) {
      std::vector<std::size_t> P;
      for (int c = l; c <= r; ++c) P.push_back(static_cast<std::size_t>(c - 1));
      D[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = Y.intersect_positions(P).dim0();
    }
  auto dd = [&](int l, int r) { return r - l >= 1 ? D[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] : 0; };
  std::vector<std::pair<int, int>> loops;
  for (int l = 1; l <= n; ++l)
    for (int r = l + 1; r <= n; ++r) {
      int m = dd(l, r) - dd(l + 1, r) - dd(l, r - 1) + dd(l + 1, r - 1);
      if (m < 0) throw std::logic_error("negative loop multiplicity");
      for (int c = 0; c < m; ++c) loops.emplace_back(l, r);
    }
  KostantPicture p(n, loops);
  if (static_cast<int>(p.size()) != Y.dim0()) throw std::logic_error("loop count differs from dim_0");
  return p;
}

template <class F>
Coweight lambda_of(const Lattice<F>& Y, const KostantPicture& p) {
  return Y.delta() + side_counts(p).left;
}

template <class F>
Coweight lambda_of(const Lattice<F>& Y) {
  return lambda_of(Y, picture_of(Y));
}

/// Per-subset data for μ^w: d_S and the lowest projection degree of Y ∩ V_S
/// onto each of its columns. Filled lazily, one intersection per subset.
template <class F>
class SubsetTable {
 public:
  explicit SubsetTable(const Lattice<F>& Y) : Y_(Y) {}

  struct Entry {
    int d = 0;
    std::vector<int> min_proj;  // by position in the full lattice; unused slots hold INT_MAX
  };

  const Entry& get(Subset S) {
    auto it = memo_.find(S);
    if (it != memo_.end()) return it->second;
    Entry e;
    e.min_proj.assign(static_cast<std::size_t>(Y_.n()), INT_MAX);
    std::vector<std::size_t> P;
    for (int c = 0; c < Y_.n(); ++c)
      if (S >> c & 1u) P.push_back(static_cast<std::size_t>(c));
    if (!P.empty()) {
      auto Z = Y_.intersect_positions(P);
      e.d = Z.dim0();
      for (std::size_t q = 0; q < P.size(); ++q) e.min_proj[P[q]] = Z.min_projection_degree(q);
    }
    return memo_.emplace(S, std::move(e)).first->second;
  }

 private:
  const Lattice<F>& Y_;
  std::map<Subset, Entry> memo_;
};

/// μ^w(Y) through the d_I differences and, separately, through the lowest
/// projection degrees; the two must agree.
template <class F>
Coweight mu(const Lattice<F>& Y, const Permutation& w, SubsetTable<F>& table) {
  const int n = Y.n();
  if (w.n() != n) throw std::invalid_argument("mu: permutation size mismatch");
  Coweight by_dims(static_cast<std::size_t>(n)), by_proj(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Subset Si = 0, Snext = 0;
    for (int k = i; k <= n; ++k) Si |= Subset{1} << (w(k) - 1);
    for (int k = i + 1; k <= n; ++k) Snext |= Subset{1} << (w(k) - 1);
    const int c = w(i);
    const auto& ei = table.get(Si);
    int dnext = table.get(Snext).d;
    by_dims.at_column(c) = Y.delta().at_column(c) + ei.d - dnext;
    by_proj.at_column(c) = -ei.min_proj[static_cast<std::size_t>(c - 1)];
  }
  if (!(by_dims == by_proj))
    throw std::logic_error("mu formulas disagree for w=" + w.str() + ": " + by_dims.str() + " vs " + by_proj.str());
  return by_dims;
}

template <class F>
Coweight mu(const Lattice<F>& Y, const Permutation& w) {
  SubsetTable<F> table(Y);
  return mu(Y, w, table);
}

/// The moment polytope of the torus orbit closure: w ↦ μ^w(Y).
template <class F>
MVPolytope orbit_polytope(const Lattice<F>& Y) {
  SubsetTable<F> table(Y);
  std::map<Permutation, Coweight> by_perm;
  for (const auto& w : Permutation::all(Y.n())) by_perm.emplace(w, mu(Y, w, table));
  Coweight top = Y.n() ? by_perm.at(Permutation::identity(Y.n())) : Coweight();
  return make_polytope(Y.n(), top, std::move(by_perm));
}

/// Lower bounds floor_J = Σ_{j∈J} δ_j + d_J of Σ_{j∈J} x over P(Y).
template <class F>
std::map<Subset, long long> orbit_floors(const Lattice<F>& Y) {
  SubsetTable<F> table(Y);
  std::map<Subset, long long> out;
  const Subset full = (Subset{1} << Y.n()) - 1;
  for (Subset J = 1; J < full; ++J) out[J] = subset_sum(Y.delta(), J) + table.get(J).d;
  return out;
}

/// Ŷ_I: intersect with the other columns and renumber them 1..n−|I|.
template <class F>
Lattice<F> collapse_lattice(const Lattice<F>& Y, const std::vector<int>& I) {
  auto P = positions_from_columns(I, Y.n());
  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < static_cast<std::size_t>(Y.n()); ++p)
    if (!std::binary_search(P.begin(), P.end(), p)) rest.push_back(p);
  auto Z = Y.intersect_positions(rest);
  std::vector<int> fresh(rest.size());
  std::iota(fresh.begin(), fresh.end(), 1);
  return Z.relabel(std::move(fresh));
}

/// Limit of the orbit in the w-chamber: re-echelon with columns ordered by
/// w and keep each row's projection onto its pivot column.
template <class F>
Lattice<F> degenerate(const Lattice<F>& Y, const Permutation& w) {
  const int n = Y.n();
  if (w.n() != n) throw std::invalid_argument("degenerate: permutation size mismatch");
  std::vector<std::size_t> priority;
  for (int k = 1; k <= n; ++k) priority.push_back(static_cast<std::size_t>(w(k) - 1));
  std::vector<std::size_t> piv;
  auto M = Y.rref_in_column_priority(priority, piv);
  const std::size_t kk = static_cast<std::size_t>(n);
  std::vector<typename Lattice<F>::Row> proj;
  for (std::size_t r = 0; r < M.size(); ++r) {
    const std::size_t c = piv[r] % kk;
    typename Lattice<F>::Row v(M[r].size(), F(0));
    for (std::size_t x = c; x < v.size(); x += kk) v[x] = M[r][x];
    proj.push_back(std::move(v));
  }
  auto D = Lattice<F>::from_rows(Y.labels(), Y.lo(), Y.hi(), std::move(proj));
  auto expect = Lattice<F>::fixed_point(Y.labels(), mu(Y, w).entries());
  if (!(D == expect)) throw std::logic_error("degenerate limit differs from underline(mu) for w=" + w.str());
  return D;
}

}  // namespace mv
