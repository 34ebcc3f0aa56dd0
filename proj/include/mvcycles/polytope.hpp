#pragma once

// MV-polytopes of Kostant pictures: vertices ν(w) from sequential collapses,
// subset-sum facet bounds, exact convexity tests and vertex enumeration of
// the facet description.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvcycles/collapse.hpp"
#include "mvcycles/exact_lp.hpp"
#include "mvcycles/field.hpp"
#include "mvcycles/kostant.hpp"

namespace mv {

/// One-line notation w(1..n).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> w) : w_(std::move(w)) {
    std::vector<int> s = w_;
    std::sort(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k)
      if (s[k] != static_cast<int>(k) + 1) throw std::invalid_argument("not a permutation");
  }
  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  static Permutation longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = n - k;
    return Permutation(std::move(w));
  }
  /// "346512"; comma separated when n > 9.
  static Permutation parse(const std::string& s) {
    std::vector<int> w;
    if (s.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= s.size()) {
        std::size_t q = s.find(',', pos);
        if (q == std::string::npos) q = s.size();
        w.push_back(std::stoi(s.substr(pos, q - pos)));
        pos = q + 1;
      }
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation string: " + s);
        w.push_back(c - '0');
      }
    }
    return Permutation(std::move(w));
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& one_line() const { return w_; }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_.size() > 9 && k) s += ",";
      s += std::to_string(w_[k]);
    }
    return s;
  }

  static std::vector<Permutation> all(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

/// Column subsets of {1..n} as bit masks, bit i-1 for column i.
using Subset = std::uint32_t;

inline Subset subset_of(const std::vector<int>& cols) {
  Subset m = 0;
  for (int c : cols) m |= Subset{1} << (c - 1);
  return m;
}

inline std::vector<int> subset_columns(Subset m, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (m >> (i - 1) & 1u) out.push_back(i);
  return out;
}

struct MVPolytope {
  int n = 0;
  Coweight lambda;
  std::map<Permutation, Coweight> vertex_by_perm;
  std::vector<Coweight> vertices;  // sorted, distinct
  std::map<Subset, long long> facets;  // proper nonempty I -> c_I

  friend bool operator==(const MVPolytope&, const MVPolytope&) = default;
};

/// ν(w) with ν_i = λ_i − l_i + N_i.
inline Coweight vertex(const KostantPicture& p, const Coweight& lambda, const Permutation& w) {
  if (static_cast<int>(lambda.size()) != p.n() || w.n() != p.n())
    throw std::invalid_argument("vertex: size mismatch");
  auto tr = collapse_sequence(p, w.one_line());
  Coweight nu = lambda - side_counts(p).left;
  for (int k = 1; k <= p.n(); ++k) nu.at_column(w(k)) += tr.steps[static_cast<std::size_t>(k - 1)].removed;
  return nu;
}

inline Coweight lowest_vertex(const KostantPicture& p, const Coweight& lambda) {
  auto s = side_counts(p);
  return lambda - s.left + s.right;
}

/// c_I from prefix sums of ν(w); throws if two representatives disagree.
inline std::map<Subset, long long> facet_bounds(int n, const std::map<Permutation, Coweight>& vertex_by_perm) {
  std::map<Subset, long long> c;
  for (const auto& [w, nu] : vertex_by_perm) {
    Subset I = 0;
    long long sum = 0;
    for (int k = 1; k < n; ++k) {
      I |= Subset{1} << (w(k) - 1);
      sum += nu.at_column(w(k));
      auto [it, fresh] = c.emplace(I, sum);
      if (!fresh && it->second != sum)
        throw std::logic_error("facet bound for I=" + std::to_string(I) + " depends on the representative " +
                               w.str());
    }
  }
  return c;
}

/// Σ_{i∈J} x_i over J, for a coweight.
inline long long subset_sum(const Coweight& x, Subset J) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (J >> i & 1u) s += x[i];
  return s;
}

inline std::vector<Coweight> distinct_vertices(const std::map<Permutation, Coweight>& by_perm) {
  std::set<Coweight> s;
  for (const auto& [w, v] : by_perm) s.insert(v);
  return {s.begin(), s.end()};
}

inline bool contains(const MVPolytope& P, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != P.n) throw std::invalid_argument("contains: size mismatch");
  Rational total = 0;
  for (const auto& v : x) total += v;
  if (total != rat(P.lambda.total())) return false;
  for (const auto& [I, c] : P.facets) {
    Rational s = 0;
    for (int i = 0; i < P.n; ++i)
      if (I >> i & 1u) s += x[static_cast<std::size_t>(i)];
    if (s > rat(c)) return false;
  }
  return true;
}

inline bool contains(const MVPolytope& P, const Coweight& x) {
  std::vector<Rational> q(x.begin(), x.end());
  return contains(P, q);
}

/// True iff the point is not a convex combination of the other points.
inline bool is_vertex(const Coweight& point, const std::vector<Coweight>& points) {
  std::vector<const Coweight*> others;
  for (const auto& v : points)
    if (!(v == point)) others.push_back(&v);
  if (others.empty()) return true;
  const std::size_t n = point.size();
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(others.size()));
  std::vector<Rational> b(n + 1);
  for (std::size_t j = 0; j < others.size(); ++j) {
    if (others[j]->size() != n) throw std::invalid_argument("is_vertex: size mismatch");
    for (std::size_t i = 0; i < n; ++i) A[i][j] = (*others[j])[i];
    A[n][j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = point[i];
  b[n] = 1;
  return !feasible_point(A, b).has_value();
}

/// Runs the ordered collapses of every permutation as a prefix tree, so
/// permutations sharing a prefix share its collapses.
inline std::map<Permutation, Coweight> all_vertices(const KostantPicture& p, const Coweight& lambda) {
  const int n = p.n();
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda size mismatch");
  std::map<Permutation, Coweight> out;
  const Coweight base = lambda - side_counts(p).left;
  std::vector<int> order;
  std::vector<int> removed;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, const KostantPicture& cur) -> void {
    if (static_cast<int>(order.size()) == n) {
      Coweight nu = base;
      for (int k = 0; k < n; ++k) nu.at_column(order[static_cast<std::size_t>(k)]) += removed[static_cast<std::size_t>(k)];
      out.emplace(Permutation(order), nu);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      order.push_back(c);
      used[static_cast<std::size_t>(c)] = 1;
      int h = collapse_offset(order, order.size() - 1);
      if (cur.n() >= 2) {
        auto res = collapse_column(cur, c - h);
        removed.push_back(res.removed);
        self(self, res.picture);
      } else {
        removed.push_back(0);
        self(self, KostantPicture(0));
      }
      removed.pop_back();
      used[static_cast<std::size_t>(c)] = 0;
      order.pop_back();
    }
  };
  rec(rec, p);
  return out;
}

/// Checks the structural invariants shared by MV-polytopes and orbit polytopes.
inline void check_polytope(const MVPolytope& P) {
  if (P.n == 0) return;
  if (!(P.vertex_by_perm.at(Permutation::identity(P.n)) == P.lambda))
    throw std::logic_error("identity vertex differs from lambda");
  for (const auto& [w, v] : P.vertex_by_perm) {
    if (v.total() != P.lambda.total()) throw std::logic_error("vertex " + w.str() + " leaves the hyperplane");
    if (!contains(P, v)) throw std::logic_error("vertex " + w.str() + " violates a facet bound");
  }
}

inline MVPolytope make_polytope(int n, const Coweight& lambda, std::map<Permutation, Coweight> by_perm) {
  MVPolytope P;
  P.n = n;
  P.lambda = lambda;
  P.vertex_by_perm = std::move(by_perm);
  P.vertices = distinct_vertices(P.vertex_by_perm);
  P.facets = facet_bounds(n, P.vertex_by_perm);
  check_polytope(P);
  return P;
}

inline MVPolytope mv_polytope(const KostantPicture& p, const Coweight& lambda) {
  return make_polytope(p.n(), lambda, all_vertices(p, lambda));
}

/// Translates every vertex and bound by mu.
inline MVPolytope translate(const MVPolytope& P, const Coweight& mu) {
  MVPolytope Q = P;
  Q.lambda = P.lambda + mu;
  for (auto& [w, v] : Q.vertex_by_perm) v += mu;
  for (auto& v : Q.vertices) v += mu;
  for (auto& [I, c] : Q.facets) c += subset_sum(mu, I);
  return Q;
}

/// Vertices of {x : Σx = total, Σ_{i∈I} x_i ≤ c_I}, by solving every
/// choice of n−1 tight constraints and keeping the feasible solutions.
/// Integer Bareiss elimination keeps the inner loop free of big numbers.
inline std::vector<std::vector<Rational>> hrep_vertices(int n, long long total,
                                                        const std::map<Subset, long long>& facets) {
  using i128 = __int128;
  if (n <= 1) return {std::vector<Rational>(static_cast<std::size_t>(n), rat(total))};
  const std::size_t d = static_cast<std::size_t>(n - 1);
  // Eliminate x_n = total − Σ_{i<n} x_i; rows are [a | b] with a·y ≤ b.
  std::vector<std::vector<long long>> rows;
  for (const auto& [I, c] : facets) {
    std::vector<long long> r(d + 1, 0);
    bool has_n = I >> (n - 1) & 1u;
    for (std::size_t i = 0; i < d; ++i) {
      bool in = I >> i & 1u;
      r[i] = has_n ? (in ? 0 : -1) : (in ? 1 : 0);
    }
    r[d] = has_n ? c - total : c;
    rows.push_back(std::move(r));
  }
  const std::size_t R = rows.size();

  std::set<std::vector<long long>> found;  // (N_1..N_d, D) with D > 0, reduced
  std::vector<std::size_t> pick;
  std::vector<std::vector<i128>> M(d, std::vector<i128>(d + 1));
  std::vector<i128> N(d);

  auto leaf = [&]() {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j <= d; ++j) M[i][j] = rows[pick[i]][j];
    i128 prev = 1;
    for (std::size_t k = 0; k < d; ++k) {
      std::size_t p = k;
      while (p < d && M[p][k] == 0) ++p;
      if (p == d) return;
      if (p != k) std::swap(M[p], M[k]);
      for (std::size_t i = k + 1; i < d; ++i) {
        for (std::size_t j = k + 1; j <= d; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        M[i][k] = 0;
      }
      prev = M[k][k];
    }
    i128 D = M[d - 1][d - 1];
    // Fraction-free back substitution: y_i = N_i / D.
    for (std::size_t ii = d; ii-- > 0;) {
      i128 s = D * M[ii][d];
      for (std::size_t j = ii + 1; j < d; ++j) s -= M[ii][j] * N[j];
      N[ii] = s / M[ii][ii];
    }
    if (D < 0) {
      D = -D;
      for (auto& v : N) v = -v;
    }
    for (const auto& r : rows) {
      i128 s = 0;
      for (std::size_t j = 0; j < d; ++j) s += r[j] * N[j];
      if (s > static_cast<i128>(r[d]) * D) return;
    }
    i128 g = D;
    for (auto v : N) {
      i128 a = g, b = v < 0 ? -v : v;
      while (b) {
        i128 t = a % b;
        a = b;
        b = t;
      }
      g = a;
    }
    std::vector<long long> key(d + 1);
    for (std::size_t j = 0; j < d; ++j) key[j] = static_cast<long long>(N[j] / g);
    key[d] = static_cast<long long>(D / g);
    found.insert(std::move(key));
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == d) {
      leaf();
      return;
    }
    for (std::size_t k = start; k + (d - pick.size()) <= R; ++k) {
      pick.push_back(k);
      self(self, k + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::set<std::vector<Rational>> out;
  for (const auto& key : found) {
    std::vector<Rational> x(d + 1);
    Rational last = rat(total);
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = rat(key[j]) / rat(key[d]);
      last -= x[j];
    }
    x[d] = last;
    out.insert(std::move(x));
  }
  return {out.begin(), out.end()};
}

/// Every MV-cycle picture with highest coweight α and lowest coweight β.
inline std::vector<KostantPicture> enumerate_mv_cycles(const Coweight& alpha, const Coweight& beta) {
  if (alpha.size() != beta.size() || alpha.size() == 0) throw std::invalid_argument("alpha/beta size mismatch");
  Coweight diff = alpha - beta;
  if (diff.total() != 0) return {};
  auto weight = RootCombination::from_coweight(diff);
  if (!weight.nonnegative()) return {};
  return enumerate_pictures(static_cast<int>(alpha.size()), weight);
}

}  // namespace mv
