#pragma once

// p-flags of lattices and the three compatibility grades, plus the explicit
// parametrization of M(p, λ) by flag points and its inverse.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvcycles/collapse.hpp"
#include "mvcycles/kostant.hpp"
#include "mvcycles/lattice.hpp"
#include "mvcycles/term_vector.hpp"

namespace mv {

/// Asked for (strong) compatibility of a lattice that is not even weakly
/// compatible with the picture.
struct NotWeaklyCompatible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Loop indices of p ordered so that every loop comes after the loops it encircles.
inline std::vector<std::size_t> inclusion_order(const KostantPicture& p) {
  std::vector<std::size_t> idx(p.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Loop &A = p.loops()[a], &B = p.loops()[b];
    if (A.length() != B.length()) return A.length() < B.length();
    return A.copy < B.copy;
  });
  return idx;
}

inline std::vector<int> loop_columns(const Loop& L) {
  std::vector<int> cols;
  for (int c = L.left; c <= L.right; ++c) cols.push_back(c);
  return cols;
}

template <class F>
struct PFlag {
  KostantPicture picture;
  std::vector<Lattice<F>> Y;       // Y_L, indexed like picture.loops()
  std::vector<Lattice<F>> Y_circ;  // Y_L°
};

/// Y_0 ∩ V_L as a lattice on the columns of L.
template <class F>
Lattice<F> monomial_part(const Lattice<F>& Y, const Loop& L) {
  std::vector<int> labels, depth;
  for (int c = L.left; c <= L.right; ++c) {
    labels.push_back(Y.labels()[static_cast<std::size_t>(c - 1)]);
    depth.push_back(Y.delta().at_column(c));
  }
  return Lattice<F>::fixed_point(std::move(labels), depth);
}

/// The unique p-flag: Y_L = Y ∩ t^{-1} Y_L°, built innermost first. Throws
/// if some quotient Y_L / Y_L° is not a line.
template <class F>
PFlag<F> build_p_flag(const Lattice<F>& Y, const KostantPicture& p) {
  if (p.n() != Y.n()) throw std::invalid_argument("build_p_flag: column count mismatch");
  PFlag<F> fl;
  fl.picture = p;
  std::vector<std::optional<Lattice<F>>> Ys(p.size()), Yc(p.size());
  for (std::size_t li : inclusion_order(p)) {
    const Loop& L = p.loops()[li];
    auto cols = loop_columns(L);
    std::vector<std::size_t> P;
    for (int c : cols) P.push_back(static_cast<std::size_t>(c - 1));
    Lattice<F> circ = monomial_part(Y, L);
    std::vector<int> depth;
    for (int c : cols) depth.push_back(Y.delta().at_column(c));
    for (std::size_t lj = 0; lj < p.size(); ++lj)
      if (encircles(L, p.loops()[lj])) circ = sum(circ, Ys[lj]->embed(circ.labels(), depth));
    Lattice<F> YL = intersect(Y.intersect_positions(P), circ.mul_t(-1));
    if (YL.relative_dimension() - circ.relative_dimension() != 1)
      throw std::logic_error("p-flag quotient at " + L.str() + " has dimension " +
                             std::to_string(YL.relative_dimension() - circ.relative_dimension()));
    Ys[li] = std::move(YL);
    Yc[li] = std::move(circ);
  }
  for (std::size_t li = 0; li < p.size(); ++li) {
    fl.Y.push_back(std::move(*Ys[li]));
    fl.Y_circ.push_back(std::move(*Yc[li]));
  }
  return fl;
}

/// Proj_{V_c}(Y_L) ≠ Proj_{V_c}(Y_L°) for column c (1-based in the lattice).
template <class F>
bool projection_grows(const PFlag<F>& fl, std::size_t li, int c) {
  const Loop& L = fl.picture.loops()[li];
  std::size_t q = static_cast<std::size_t>(c - L.left);
  return fl.Y[li].min_projection_degree(q) < fl.Y_circ[li].min_projection_degree(q);
}

/// Columns where Proj_{V_c}(Y_L) = Proj_{V_c}(Y_L°), as (loop index, column) pairs.
template <class F>
std::vector<std::pair<std::size_t, int>> compatibility_failures(const PFlag<F>& fl, bool ends_only) {
  std::vector<std::pair<std::size_t, int>> bad;
  for (std::size_t li = 0; li < fl.picture.size(); ++li) {
    const Loop& L = fl.picture.loops()[li];
    for (int c = L.left; c <= L.right; ++c) {
      if (ends_only && c != L.left && c != L.right) continue;
      if (!projection_grows(fl, li, c)) bad.emplace_back(li, c);
    }
  }
  return bad;
}

/// p(Y) = p, cross-checked against the end columns of the flag.
template <class F>
bool is_weakly_compatible(const Lattice<F>& Y, const KostantPicture& p) {
  if (p.n() != Y.n()) return false;
  if (!(picture_of(Y) == p)) return false;
  auto fl = build_p_flag(Y, p);
  if (!compatibility_failures(fl, true).empty())
    throw std::logic_error("p(Y) = p but a p-flag projection fails to grow at a loop end");
  return true;
}

namespace detail {

template <class F>
bool compatible_given_weak(const Lattice<F>& Y, const KostantPicture& p) {
  auto fl = build_p_flag(Y, p);
  if (!compatibility_failures(fl, true).empty())
    throw std::logic_error("p(Y) = p but a p-flag projection fails to grow at a loop end");
  return compatibility_failures(fl, false).empty();
}

}  // namespace detail

template <class F>
bool is_compatible(const Lattice<F>& Y, const KostantPicture& p) {
  if (p.n() != Y.n() || !(picture_of(Y) == p))
    throw NotWeaklyCompatible("lattice is not weakly compatible to " + p.str());
  return detail::compatible_given_weak(Y, p);
}

/// Compatibility of every collapse Ŷ_I to p̂_I with at least two columns
/// left. Subsets are visited breadth first; the picture reached through
/// different orders must agree, and each collapse of a compatible pair must
/// be weakly compatible.
template <class F>
bool is_strongly_compatible(const Lattice<F>& Y, const KostantPicture& p) {
  if (p.n() != Y.n() || !(picture_of(Y) == p))
    throw NotWeaklyCompatible("lattice is not weakly compatible to " + p.str());
  const int n = Y.n();
  struct Node {
    Lattice<F> Y;
    KostantPicture p;
    std::vector<int> remaining;  // original columns still present
  };
  std::map<Subset, KostantPicture> seen;
  std::vector<Node> frontier;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) all[static_cast<std::size_t>(c - 1)] = c;
  frontier.push_back({Y, p, all});
  seen.emplace(0, p);
  while (!frontier.empty()) {
    std::vector<Node> next;
    std::map<Subset, std::size_t> queued;
    for (auto& node : frontier) {
      if (node.remaining.size() < 2) continue;
      if (!detail::compatible_given_weak(node.Y, node.p)) return false;
      if (node.remaining.size() == 2) continue;
      Subset gone = 0;
      for (int c = 1; c <= n; ++c)
        if (!std::binary_search(node.remaining.begin(), node.remaining.end(), c)) gone |= Subset{1} << (c - 1);
      for (std::size_t pos = 0; pos < node.remaining.size(); ++pos) {
        int orig = node.remaining[pos];
        Subset key = gone | Subset{1} << (orig - 1);
        KostantPicture q = collapse_column(node.p, static_cast<int>(pos) + 1).picture;
        auto it = seen.find(key);
        if (it != seen.end()) {
          if (!(it->second == q)) throw std::logic_error("collapse of the picture depends on the column order");
          continue;
        }
        seen.emplace(key, q);
        auto Yq = collapse_lattice(node.Y, {static_cast<int>(pos) + 1});
        if (!(picture_of(Yq) == q))
          throw std::logic_error("collapse of a compatible lattice is not weakly compatible to the collapsed picture");
        std::vector<int> rest = node.remaining;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        next.push_back({std::move(Yq), std::move(q), std::move(rest)});
      }
    }
    frontier = std::move(next);
  }
  return true;
}

/// Coefficients (a_ℓ = 1, a_{ℓ+1}, ..., a_r) of the line p_L for every loop.
struct FlagPoint {
  std::map<Loop, std::vector<Rational>> coeffs;

  /// Free coordinates: one projective line of ⟨e_ℓ..e_r⟩ per loop.
  std::size_t degrees_of_freedom() const {
    std::size_t s = 0;
    for (const auto& [L, a] : coeffs) s += a.size() - 1;
    return s;
  }
  friend bool operator==(const FlagPoint&, const FlagPoint&) = default;
};

/// Left end of the largest loop encircled by L with right end r(L), or r(L).
inline int nonvanishing_column(const KostantPicture& p, const Loop& L) {
  const Loop* best = nullptr;
  for (const auto& M : p.loops())
    if (M.right == L.right && encircles(L, M))
      if (!best || encircles(M, *best)) best = &M;
  return best ? best->left : L.right;
}

inline void check_flag_point(const KostantPicture& p, const FlagPoint& pt) {
  if (pt.coeffs.size() != p.size()) throw std::invalid_argument("flag point has the wrong number of loops");
  for (const auto& L : p.loops()) {
    auto it = pt.coeffs.find(L);
    if (it == pt.coeffs.end()) throw std::invalid_argument("flag point lacks loop " + L.str());
    const auto& a = it->second;
    if (a.size() != static_cast<std::size_t>(L.length() + 1))
      throw std::invalid_argument("flag point for " + L.str() + " has the wrong length");
    if (a[0] != 1) throw std::invalid_argument("flag point for " + L.str() + " is not normalized");
    int m = nonvanishing_column(p, L);
    if (is_zero(a[static_cast<std::size_t>(m - L.left)]))
      throw std::invalid_argument("flag point for " + L.str() + " vanishes at column " + std::to_string(m));
  }
}

namespace detail {

/// y_k for loop L: the vector of the largest loop encircled by L with left
/// end k, or the monomial t^{-δ_k} e_k.
inline TermVector column_vector(const KostantPicture& p, const std::map<Loop, TermVector>& y, const Coweight& depth,
                                const Loop& L, int k) {
  const Loop* best = nullptr;
  for (const auto& M : p.loops())
    if (M.left == k && encircles(L, M))
      if (!best || encircles(M, *best)) best = &M;
  if (best) return y.at(*best);
  return TermVector::monomial(-depth.at_column(k), k);
}

}  // namespace detail

/// π(point): builds y_L = Σ a_k t^{-1} y_k innermost first over the base
/// underline(λ − l).
inline QLattice construct(const KostantPicture& p, const Coweight& lambda, const FlagPoint& pt) {
  if (static_cast<int>(lambda.size()) != p.n()) throw std::invalid_argument("construct: lambda size mismatch");
  check_flag_point(p, pt);
  const Coweight depth = lambda - side_counts(p).left;
  std::map<Loop, TermVector> y;
  std::vector<TermVector> gens;
  for (int k = 1; k <= p.n(); ++k) gens.push_back(TermVector::monomial(-depth.at_column(k), k));
  for (std::size_t li : inclusion_order(p)) {
    const Loop& L = p.loops()[li];
    const auto& a = pt.coeffs.at(L);
    TermVector v;
    for (int k = L.left; k <= L.right; ++k)
      v += a[static_cast<std::size_t>(k - L.left)] * detail::column_vector(p, y, depth, L, k).mul_t(-1);
    y[L] = v;
    gens.push_back(std::move(v));
  }
  return QLattice::from_generators(p.n(), gens);
}

/// Inverse of construct on weakly compatible lattices.
inline FlagPoint point_of(const QLattice& Y) {
  const KostantPicture p = picture_of(Y);
  const auto fl = build_p_flag(Y, p);
  const Coweight& depth = Y.delta();
  std::map<Loop, TermVector> y;
  FlagPoint pt;
  for (std::size_t li : inclusion_order(p)) {
    const Loop& L = p.loops()[li];
    const QLattice& circ = fl.Y_circ[li];
    // A vector of Y_L outside Y_L°, in the original column numbering.
    std::optional<TermVector> pick;
    for (auto v : fl.Y[li].basis_terms()) {
      if (!circ.member(v)) {
        pick = std::move(v);
        break;
      }
    }
    if (!pick) throw std::logic_error("Y_L equals Y_L° at " + L.str());
    // Columns of Y_L are labelled by Y's positions L.left..L.right.
    std::vector<TermVector> basis;
    for (int k = L.left; k <= L.right; ++k) basis.push_back(detail::column_vector(p, y, depth, L, k).mul_t(-1));
    // Solve pick ≡ Σ b_k basis_k modulo Y_L°.
    auto target = circ.reduce(*pick);
    std::vector<TermVector> red;
    for (const auto& b : basis) red.push_back(circ.reduce(b));
    std::map<TermVector::Key, std::size_t> coord;
    for (const auto& r : red)
      for (const auto& [key, c] : r.terms()) coord.emplace(key, 0);
    for (const auto& [key, c] : target.terms()) coord.emplace(key, 0);
    std::size_t idx = 0;
    for (auto& [key, v] : coord) v = idx++;
    const std::size_t nb = red.size();
    std::vector<std::vector<Rational>> A(coord.size(), std::vector<Rational>(nb + 1));
    for (std::size_t j = 0; j < nb; ++j)
      for (const auto& [key, c] : red[j].terms()) A[coord.at(key)][j] = c;
    for (const auto& [key, c] : target.terms()) A[coord.at(key)][nb] = c;
    auto piv = mv::detail::rref(A);
    if (!piv.empty() && piv.back() == nb) throw std::logic_error("flag vector is not in t^{-1} Y_L° at " + L.str());
    if (piv.size() != nb) throw std::logic_error("column vectors are dependent modulo Y_L° at " + L.str());
    std::vector<Rational> b(nb);
    for (std::size_t r = 0; r < nb; ++r) b[piv[r]] = A[r][nb];
    if (is_zero(b[0])) throw std::logic_error("flag line misses its left end at " + L.str());
    std::vector<Rational> a(nb);
    for (std::size_t j = 0; j < nb; ++j) a[j] = b[j] / b[0];
    TermVector v;
    for (std::size_t j = 0; j < nb; ++j) v += a[j] * basis[j];
    y[L] = v;
    pt.coeffs.emplace(L, std::move(a));
  }
  return pt;
}

struct Sample {
  QLattice lattice;
  FlagPoint point;
  int attempts = 0;
};

/// Uniform draw from {−7..7} \ {0}, reproducible across standard libraries.
inline int draw_coefficient(std::mt19937_64& rng) {
  int u = static_cast<int>(rng() % 14);
  return u < 7 ? u - 7 : u - 6;
}

inline FlagPoint random_flag_point(const KostantPicture& p, std::mt19937_64& rng) {
  FlagPoint pt;
  for (const auto& L : p.loops()) {
    std::vector<Rational> a(static_cast<std::size_t>(L.length() + 1));
    a[0] = 1;
    for (std::size_t k = 1; k < a.size(); ++k) a[k] = draw_coefficient(rng);
    pt.coeffs.emplace(L, std::move(a));
  }
  return pt;
}

struct RetriesExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Draws flag points until the lattice is strongly compatible.
inline Sample sample(const KostantPicture& p, const Coweight& lambda, std::mt19937_64& rng, int max_attempts = 10) {
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    FlagPoint pt = random_flag_point(p, rng);
    QLattice Y = construct(p, lambda, pt);
    if (is_strongly_compatible(Y, p)) return {std::move(Y), std::move(pt), attempt};
  }
  throw RetriesExhausted("no strongly compatible sample for " + p.str() + " after " + std::to_string(max_attempts) +
                         " draws");
}

}  // namespace mv
