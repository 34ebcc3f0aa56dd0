#pragma once

// JSON readers and writers for pictures, lattices, polytopes, flag points
// and collapse traces. Rationals are [numerator, denominator] pairs; parts
// that do not fit in 64 bits are written as decimal strings.

#include <climits>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvcycles/collapse.hpp"
#include "mvcycles/compat.hpp"
#include "mvcycles/kostant.hpp"
#include "mvcycles/lattice.hpp"
#include "mvcycles/polytope.hpp"

namespace mv::io {

using json = nlohmann::ordered_json;

/// Malformed input document.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string");
    return z;
  }
  throw FormatError("expected an integer");
}

inline int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) throw FormatError(std::string("expected an integer for ") + what);
  long long v = j.get<long long>();
  if (v < INT_MIN || v > INT_MAX) throw FormatError(std::string("integer out of range for ") + what);
  return static_cast<int>(v);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline json to_json(const Rational& q) {
  return json::array({detail::integer_json(q.get_num()), detail::integer_json(q.get_den())});
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(detail::integer_from(j));
  if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [numerator, denominator]");
  mpz_class num = detail::integer_from(j[0]), den = detail::integer_from(j[1]);
  if (den == 0) throw FormatError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline json to_json(const Coweight& c) { return json(c.entries()); }

inline Coweight coweight_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("coweight must be an array");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(detail::int_from(x, "coweight entry"));
  return Coweight(std::move(v));
}

inline json to_json(const KostantPicture& p) {
  json loops = json::array();
  for (const auto& L : p.loops()) loops.push_back(json::array({L.left, L.right}));
  return json{{"n", p.n()}, {"loops", loops}};
}

inline KostantPicture picture_from_json(const json& j) {
  int n = detail::int_from(detail::field(j, "n"), "n");
  std::vector<std::pair<int, int>> loops;
  for (const auto& L : detail::field(j, "loops")) {
    if (!L.is_array() || L.size() != 2) throw FormatError("loop must be [left, right]");
    loops.emplace_back(detail::int_from(L[0], "loop end"), detail::int_from(L[1], "loop end"));
  }
  try {
    return KostantPicture(n, loops);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const TermVector& v) {
  json out = json::array();
  for (const auto& [key, c] : v.terms()) out.push_back(json::array({to_json(c), key.first, key.second}));
  return out;
}

inline TermVector term_vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("generator must be an array of [coefficient, degree, column]");
  TermVector v;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw FormatError("term must be [coefficient, degree, column]");
    int col = detail::int_from(t[2], "column");
    if (col < 1) throw FormatError("column index must be positive");
    v.add(rational_from_json(t[0]), detail::int_from(t[1], "degree"), col);
  }
  return v;
}

/// Canonical dump: the echelon basis of Y / t^{hi} X_0 as generators, plus
/// the window, which re-reads to the same lattice.
inline json to_json(const QLattice& Y) {
  for (std::size_t k = 0; k < Y.labels().size(); ++k)
    if (Y.labels()[k] != static_cast<int>(k) + 1) throw std::invalid_argument("only lattices on columns 1..n are serialized");
  json gens = json::array();
  for (const auto& v : Y.basis_terms()) gens.push_back(to_json(v));
  return json{{"n", Y.n()}, {"window", json::array({Y.lo(), Y.hi()})}, {"generators", gens}};
}

inline QLattice lattice_from_json(const json& j) {
  int n = detail::int_from(detail::field(j, "n"), "n");
  if (n < 1) throw FormatError("lattice needs n >= 1");
  std::vector<TermVector> gens;
  for (const auto& g : detail::field(j, "generators")) {
    auto v = term_vector_from_json(g);
    if (v.max_column() > n) throw FormatError("generator column exceeds n");
    gens.push_back(std::move(v));
  }
  std::optional<std::pair<int, int>> window;
  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (!w.is_array() || w.size() != 2) throw FormatError("window must be [lo, hi]");
    window = std::pair{detail::int_from(w[0], "window"), detail::int_from(w[1], "window")};
    if (window->first > window->second) throw FormatError("window must have lo <= hi");
    for (const auto& g : gens)
      if (!g.empty() && g.min_degree() < window->first) throw FormatError("generator below the window");
  }
  // A lattice with no generator at all is t^{hi} X_0 for the stated window.
  if (gens.empty()) {
    int hi = window ? window->second : 0;
    return QLattice::fixed_point(Coweight(std::vector<int>(static_cast<std::size_t>(n), -hi)));
  }
  try {
    return QLattice::from_generators(n, gens, window);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const MVPolytope& P) {
  json vertices = json::array();
  for (const auto& v : P.vertices) vertices.push_back(to_json(v));
  json by_perm = json::object();
  for (const auto& [w, v] : P.vertex_by_perm) by_perm[w.str()] = to_json(v);
  json facets = json::array();
  for (const auto& [I, c] : P.facets) facets.push_back(json{{"I", subset_columns(I, P.n)}, {"c", c}});
  return json{{"n", P.n}, {"lambda", to_json(P.lambda)}, {"vertices", vertices}, {"vertex_by_perm", by_perm},
              {"facets", facets}};
}

/// Rebuilds from vertex_by_perm and checks the stored vertices and facets.
inline MVPolytope polytope_from_json(const json& j) {
  int n = detail::int_from(detail::field(j, "n"), "n");
  Coweight lambda = coweight_from_json(detail::field(j, "lambda"));
  std::map<Permutation, Coweight> by_perm;
  for (const auto& [key, v] : detail::field(j, "vertex_by_perm").items()) {
    try {
      by_perm.emplace(Permutation::parse(key), coweight_from_json(v));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  MVPolytope P = make_polytope(n, lambda, std::move(by_perm));
  if (to_json(P) != j) throw FormatError("polytope document is inconsistent with its vertex map");
  return P;
}

inline json to_json(const FlagPoint& pt) {
  json coeffs = json::object();
  for (const auto& [L, a] : pt.coeffs) {
    json row = json::array();
    for (const auto& q : a) row.push_back(to_json(q));
    coeffs[L.str()] = row;
  }
  return json{{"coeffs", coeffs}};
}

inline Loop loop_from_key(const std::string& key) {
  int l = 0, r = 0, c = 0;
  char tail = 0;
  if (std::sscanf(key.c_str(), "[%d,%d]#%d%c", &l, &r, &c, &tail) != 3) throw FormatError("bad loop key " + key);
  return Loop{l, r, c};
}

inline FlagPoint flag_point_from_json(const json& j) {
  FlagPoint pt;
  for (const auto& [key, row] : detail::field(j, "coeffs").items()) {
    std::vector<Rational> a;
    for (const auto& q : row) a.push_back(rational_from_json(q));
    pt.coeffs.emplace(loop_from_key(key), std::move(a));
  }
  return pt;
}

inline json loop_json(const Loop& L) { return json::array({L.left, L.right}); }

inline json to_json(const CollapseTrace& tr) {
  json steps = json::array();
  for (std::size_t m = 0; m < tr.steps.size(); ++m) {
    const auto& s = tr.steps[m];
    json joins = json::array();
    for (const auto& jn : s.joins)
      joins.push_back(json::array({loop_json(jn.result), loop_json(jn.left_parent), loop_json(jn.right_parent)}));
    json surv = json::array();
    for (const auto& [old, neu] : s.survivors) surv.push_back(json::array({loop_json(old), loop_json(neu)}));
    steps.push_back(json{{"column", tr.order[m]},
                         {"offset", tr.offsets[m]},
                         {"renumbered_column", s.column},
                         {"N", s.removed},
                         {"joins", joins},
                         {"survivors", surv},
                         {"picture", to_json(s.picture)}});
  }
  return json{{"input", to_json(tr.input)}, {"order", tr.order}, {"steps", steps}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mv::io
