#pragma once

// Batch checks over many inputs. Each sweep returns a Report listing the
// inputs on which a check failed, shrunk to a small reproduction.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mvcycles/collapse.hpp"
#include "mvcycles/compat.hpp"
#include "mvcycles/io.hpp"
#include "mvcycles/kostant.hpp"
#include "mvcycles/lattice.hpp"
#include "mvcycles/polytope.hpp"

namespace mv::verify {

using io::json;

struct Report {
  Report() = default;
  explicit Report(std::string check) : name(std::move(check)) {}

  std::string name;
  std::size_t instances = 0;
  std::vector<json> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }

  json to_json() const {
    return json{{"check", name},
                {"instances", instances},
                {"passed", passed()},
                {"failures", failures},
                {"seconds", seconds}};
  }
};

namespace detail {

class Timer {
 public:
  explicit Timer(Report& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  Report& r_;
  std::chrono::steady_clock::time_point t0_;
};

inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Runs f, turning an escaped exception into a failure message.
inline std::string guarded(const std::function<std::string()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace detail

/// Every picture on n columns with len(p) ≤ len_max.
inline std::vector<KostantPicture> all_pictures(int n, int len_max) {
  std::vector<std::pair<int, int>> ivs;
  for (int l = 1; l <= n; ++l)
    for (int r = l + 1; r <= n; ++r) ivs.emplace_back(l, r);
  std::vector<KostantPicture> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
    if (k == ivs.size()) {
      out.emplace_back(n, chosen);
      return;
    }
    const int len = ivs[k].second - ivs[k].first;
    std::size_t base = chosen.size();
    for (int m = 0; m * len <= budget; ++m) {
      self(self, k + 1, budget - m * len);
      chosen.push_back(ivs[k]);
    }
    chosen.resize(base);
  };
  rec(rec, 0, len_max);
  return out;
}

/// Random picture on n columns with len(p) ≤ len_max; loops are added while
/// they fit.
inline KostantPicture random_picture(int n, int len_max, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> loops;
  int budget = std::uniform_int_distribution<int>(0, len_max)(rng);
  for (int tries = 0; tries < 4 * len_max + 4 && budget > 0; ++tries) {
    int l = std::uniform_int_distribution<int>(1, n - 1)(rng);
    int r = std::uniform_int_distribution<int>(l + 1, n)(rng);
    if (r - l > budget) continue;
    loops.emplace_back(l, r);
    budget -= r - l;
  }
  return KostantPicture(n, loops);
}

inline Coweight random_coweight(int n, int lo, int hi, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = std::uniform_int_distribution<int>(lo, hi)(rng);
  return Coweight(std::move(v));
}

/// Greedily deletes loops while the failure persists.
inline KostantPicture shrink_picture(KostantPicture p, const std::function<bool(const KostantPicture&)>& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    auto iv = p.intervals();
    for (std::size_t k = 0; k < iv.size(); ++k) {
      auto rest = iv;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      KostantPicture q(p.n(), rest);
      if (fails(q)) {
        p = std::move(q);
        progress = true;
        break;
      }
    }
  }
  return p;
}

/// Shrinks a failing picture and records it.
inline void record_picture_failure(Report& rep, const KostantPicture& p,
                                   const std::function<std::string(const KostantPicture&)>& check) {
  auto small = shrink_picture(p, [&](const KostantPicture& q) { return !detail::guarded([&] { return check(q); }).empty(); });
  json f{{"picture", io::to_json(small)}, {"what", detail::guarded([&] { return check(small); })}};
  if (!(small == p)) f["original"] = io::to_json(p);
  rep.failures.push_back(std::move(f));
}

inline std::string commutativity_problem(const KostantPicture& p) {
  auto fails = verify_commutativity(p);
  if (fails.empty()) return {};
  std::string order;
  for (int c : fails.front().order) order += (order.empty() ? "" : ",") + std::to_string(c);
  return fails.front().what + " (order " + order + ")";
}

inline std::string ancestry_problem(const KostantPicture& p) {
  std::string msg;
  for_each_collapse_order(p, [&](const std::vector<int>& order, const KostantPicture&) {
    if (!msg.empty()) return;
    auto fails = verify_ancestry_claims(p, order);
    if (!fails.empty()) msg = fails.front().what;
  });
  return msg;
}

/// Exhaustive for n ≤ n_max, len ≤ len_max, then random pictures on up to
/// rand_n columns with len ≤ rand_len.
inline Report sweep_commutativity(int n_max, int len_max, std::size_t random_budget, std::uint64_t seed,
                                  int rand_n = 6, int rand_len = 12) {
  Report rep("commutativity");
  detail::Timer timer(rep);
  for (int n = 3; n <= n_max; ++n)
    for (const auto& p : all_pictures(n, len_max)) {
      ++rep.instances;
      if (!detail::guarded([&] { return commutativity_problem(p); }).empty())
        record_picture_failure(rep, p, commutativity_problem);
    }
  for (std::size_t k = 0; k < random_budget; ++k) {
    auto rng = detail::instance_rng(seed, k);
    int n = std::uniform_int_distribution<int>(3, rand_n)(rng);
    auto p = random_picture(n, rand_len, rng);
    ++rep.instances;
    if (!detail::guarded([&] { return commutativity_problem(p); }).empty())
      record_picture_failure(rep, p, commutativity_problem);
  }
  return rep;
}

inline Report sweep_ancestry(int n_max, int len_max, std::size_t random_budget, std::uint64_t seed, int rand_n = 6,
                             int rand_len = 12) {
  Report rep("ancestry");
  detail::Timer timer(rep);
  for (int n = 2; n <= n_max; ++n)
    for (const auto& p : all_pictures(n, len_max)) {
      ++rep.instances;
      if (!detail::guarded([&] { return ancestry_problem(p); }).empty()) record_picture_failure(rep, p, ancestry_problem);
    }
  for (std::size_t k = 0; k < random_budget; ++k) {
    auto rng = detail::instance_rng(seed, k);
    int n = std::uniform_int_distribution<int>(3, rand_n)(rng);
    auto p = random_picture(n, rand_len, rng);
    ++rep.instances;
    if (!detail::guarded([&] { return ancestry_problem(p); }).empty()) record_picture_failure(rep, p, ancestry_problem);
  }
  return rep;
}

/// Enumeration size against the partition-function recursion for every
/// weight of height ≤ height_max on up to n_max columns.
inline Report sweep_kostant(int n_max, int height_max) {
  Report rep("kostant");
  detail::Timer timer(rep);
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t dots = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
    std::vector<int> c(dots, 0);
    auto rec = [&](auto&& self, std::size_t d, int budget) -> void {
      if (d == dots) {
        RootCombination w(c);
        ++rep.instances;
        auto pics = enumerate_pictures(n, w);
        auto count = kostant_count(n, w);
        std::set<KostantPicture> distinct(pics.begin(), pics.end());
        bool ok = pics.size() == count && distinct.size() == pics.size();
        for (const auto& p : pics) ok = ok && picture_weight(p) == w;
        if (!ok)
          rep.failures.push_back(json{{"n", n},
                                      {"weight", c},
                                      {"enumerated", pics.size()},
                                      {"distinct", distinct.size()},
                                      {"recursion", count}});
        return;
      }
      for (int v = 0; v <= budget; ++v) {
        c[d] = v;
        self(self, d + 1, budget - v);
      }
      c[d] = 0;
    };
    rec(rec, 0, height_max);
  }
  return rep;
}

/// First permutation where the two polytopes differ, or empty.
inline std::string first_difference(const MVPolytope& a, const MVPolytope& b) {
  for (const auto& [w, v] : a.vertex_by_perm) {
    auto it = b.vertex_by_perm.find(w);
    if (it == b.vertex_by_perm.end() || !(it->second == v)) return w.str();
  }
  return a.vertex_by_perm.size() == b.vertex_by_perm.size() ? std::string() : std::string("size");
}

struct MomentWitness {
  QLattice lattice;
  KostantPicture picture;
  Coweight lambda;
};

/// Strongly compatible samples must have P(Y) = P(p, λ); drawn lattices that
/// fail strong compatibility, and the given witnesses, must not.
inline Report sweep_strong_moment(const KostantPicture& p, const Coweight& lambda, std::size_t samples,
                                  std::uint64_t seed, const std::vector<MomentWitness>& witnesses = {},
                                  int max_attempts = 10) {
  Report rep("strong-moment");
  detail::Timer timer(rep);
  auto fail = [&](std::string what, std::size_t k) {
    rep.failures.push_back(json{{"picture", io::to_json(p)},
                                {"lambda", io::to_json(lambda)},
                                {"seed", seed},
                                {"sample", k},
                                {"what", std::move(what)}});
  };
  MVPolytope target;
  try {
    target = mv_polytope(p, lambda);
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what(), 0);
    return rep;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    auto rng = detail::instance_rng(seed, k);
    ++rep.instances;
    std::string msg = detail::guarded([&]() -> std::string {
      for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto pt = random_flag_point(p, rng);
        auto Y = construct(p, lambda, pt);
        auto diff = first_difference(orbit_polytope(Y), target);
        if (is_strongly_compatible(Y, p)) {
          if (!diff.empty()) return "strongly compatible sample differs from P(p,lambda) at w=" + diff;
          return {};
        }
        if (diff.empty()) return "sample that is not strongly compatible has P(Y) = P(p,lambda)";
      }
      return "retry bound exhausted";
    });
    if (!msg.empty()) fail(msg, k);
  }
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const auto& W = witnesses[k];
    ++rep.instances;
    std::string msg = detail::guarded([&]() -> std::string {
      if (is_strongly_compatible(W.lattice, W.picture)) return "witness is strongly compatible";
      if (first_difference(orbit_polytope(W.lattice), mv_polytope(W.picture, W.lambda)).empty())
        return "witness that is not strongly compatible has P(Y) = P(p,lambda)";
      return {};
    });
    if (!msg.empty())
      rep.failures.push_back(json{{"witness", io::to_json(W.lattice)}, {"picture", io::to_json(W.picture)}, {"what", msg}});
  }
  return rep;
}

inline std::string purity_problem(const KostantPicture& p, const Coweight& alpha, const Coweight& beta) {
  const int h = RootCombination::from_coweight(alpha - beta).height();
  if (p.length() != h) return "len(p) = " + std::to_string(p.length()) + " but height = " + std::to_string(h);
  if (!(lowest_vertex(p, alpha) == beta)) return "lowest vertex " + lowest_vertex(p, alpha).str();
  std::mt19937_64 rng(0);
  if (random_flag_point(p, rng).degrees_of_freedom() != static_cast<std::size_t>(p.length()))
    return "flag point dimension differs from len(p)";
  return {};
}

inline Report sweep_purity(const Coweight& alpha, const Coweight& beta) {
  Report rep("purity");
  detail::Timer timer(rep);
  for (const auto& p : enumerate_mv_cycles(alpha, beta)) {
    ++rep.instances;
    auto msg = detail::guarded([&] { return purity_problem(p, alpha, beta); });
    if (!msg.empty())
      rep.failures.push_back(
          json{{"alpha", io::to_json(alpha)}, {"beta", io::to_json(beta)}, {"picture", io::to_json(p)}, {"what", msg}});
  }
  return rep;
}

/// Random pairs α ≥ β on up to n_max columns with height(α − β) ≤ height_max.
inline Report sweep_purity_random(std::size_t pairs, int n_max, int height_max, std::uint64_t seed) {
  Report rep("purity");
  detail::Timer timer(rep);
  for (std::size_t k = 0; k < pairs; ++k) {
    auto rng = detail::instance_rng(seed, k);
    int n = std::uniform_int_distribution<int>(2, n_max)(rng);
    std::vector<int> c(static_cast<std::size_t>(n - 1), 0);
    int h = std::uniform_int_distribution<int>(0, height_max)(rng);
    for (int u = 0; u < h; ++u) ++c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
    Coweight beta = random_coweight(n, -3, 3, rng);
    Coweight alpha = beta + RootCombination(c).as_coweight();
    auto sub = sweep_purity(alpha, beta);
    rep.instances += sub.instances;
    for (auto& f : sub.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

inline std::string hrep_problem(const KostantPicture& p, const Coweight& lambda) {
  auto P = mv_polytope(p, lambda);
  for (const auto& v : P.vertices)
    if (!is_vertex(v, P.vertices)) return "nu vertex " + v.str() + " is not extreme";
  std::set<std::vector<Rational>> V;
  for (const auto& v : P.vertices) V.insert(std::vector<Rational>(v.begin(), v.end()));
  auto H = hrep_vertices(P.n, P.lambda.total(), P.facets);
  if (std::set<std::vector<Rational>>(H.begin(), H.end()) != V)
    return "facet description has " + std::to_string(H.size()) + " vertices, expected " + std::to_string(V.size());
  return {};
}

/// c_I = Σλ − floor_{I^c} for a lattice whose orbit polytope is P.
inline std::string floor_problem(const QLattice& Y, const MVPolytope& P) {
  auto floors = orbit_floors(Y);
  const Subset full = (Subset{1} << P.n) - 1;
  for (const auto& [I, c] : P.facets)
    if (c != P.lambda.total() - floors.at(full & ~I))
      return "c_I differs from the lattice bound at I=" + std::to_string(I);
  return {};
}

/// Facet well-definedness, V/H duality and, on sampled lattices, the facet
/// bounds read off from d_I.
inline Report sweep_hrep(const KostantPicture& p, const Coweight& lambda, std::size_t samples, std::uint64_t seed) {
  Report rep("hrep");
  detail::Timer timer(rep);
  ++rep.instances;
  auto msg = detail::guarded([&] { return hrep_problem(p, lambda); });
  if (!msg.empty())
    rep.failures.push_back(json{{"picture", io::to_json(p)}, {"lambda", io::to_json(lambda)}, {"what", msg}});
  for (std::size_t k = 0; k < samples; ++k) {
    auto rng = detail::instance_rng(seed, k);
    ++rep.instances;
    auto m = detail::guarded([&] {
      auto s = sample(p, lambda, rng);
      return floor_problem(s.lattice, mv_polytope(p, lambda));
    });
    if (!m.empty())
      rep.failures.push_back(
          json{{"picture", io::to_json(p)}, {"lambda", io::to_json(lambda)}, {"seed", seed}, {"sample", k}, {"what", m}});
  }
  return rep;
}

inline std::string degeneration_problem(const QLattice& Y) {
  for (const auto& w : Permutation::all(Y.n())) degenerate(Y, w);
  return {};
}

/// degenerate(Y, w) = underline(μ^w(Y)) for sampled lattices on n columns
/// and every w.
inline Report sweep_degeneration(std::size_t samples, std::uint64_t seed, int n, int len_max = 8) {
  Report rep("degeneration");
  detail::Timer timer(rep);
  for (std::size_t k = 0; k < samples; ++k) {
    auto rng = detail::instance_rng(seed, k);
    auto p = random_picture(n, len_max, rng);
    auto lambda = random_coweight(n, -2, 2, rng);
    ++rep.instances;
    auto msg = detail::guarded([&] {
      auto s = sample(p, lambda, rng);
      return degeneration_problem(s.lattice);
    });
    if (!msg.empty())
      rep.failures.push_back(json{{"picture", io::to_json(p)},
                                  {"lambda", io::to_json(lambda)},
                                  {"seed", seed},
                                  {"sample", k},
                                  {"what", msg}});
  }
  return rep;
}

/// Point → lattice → point on random pictures.
inline Report sweep_round_trip(std::size_t samples, std::uint64_t seed, int n_max = 5, int len_max = 8) {
  Report rep("round-trip");
  detail::Timer timer(rep);
  for (std::size_t k = 0; k < samples; ++k) {
    auto rng = detail::instance_rng(seed, k);
    int n = std::uniform_int_distribution<int>(2, n_max)(rng);
    auto p = random_picture(n, len_max, rng);
    auto lambda = random_coweight(n, -2, 2, rng);
    auto pt = random_flag_point(p, rng);
    ++rep.instances;
    auto msg = detail::guarded([&]() -> std::string {
      auto Y = construct(p, lambda, pt);
      if (!(point_of(Y) == pt)) return "point_of(construct(pt)) differs from pt";
      return {};
    });
    if (!msg.empty())
      rep.failures.push_back(json{{"picture", io::to_json(p)},
                                  {"lambda", io::to_json(lambda)},
                                  {"point", io::to_json(pt)},
                                  {"what", msg}});
  }
  return rep;
}

}  // namespace mv::verify
