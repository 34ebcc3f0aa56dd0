#pragma once

#include <fstream>
#include <string>

#include "mvcycles/mvcycles.hpp"

namespace mvtest {

inline mv::KostantPicture pstar() {
  return mv::KostantPicture(
      6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 4}, {3, 4}, {3, 6}, {4, 6}, {4, 6}, {5, 6}});
}

inline mv::Coweight pstar_lambda() { return mv::Coweight{2, 0, 1, 0, -1, -2}; }

inline mv::io::json load(const std::string& name) {
  std::ifstream in(std::string(MV_DATA_DIR) + "/" + name);
  return mv::io::json::parse(in);
}

inline mv::QLattice lattice(const std::string& name) { return mv::io::lattice_from_json(load(name)); }

inline std::vector<mv::TermVector> generators(const std::string& name) {
  const auto doc = load(name);
  std::vector<mv::TermVector> gens;
  for (const auto& g : doc.at("generators")) gens.push_back(mv::io::term_vector_from_json(g));
  return gens;
}

/// The right example lattice with c·t e_3 added to its first generator.
inline mv::QLattice perturbed_right(long c) {
  auto gens = generators("right_lattice.json");
  gens[0] += mv::TermVector::monomial(1, 3, mv::Rational(c));
  return mv::QLattice::from_generators(6, gens);
}

inline mv::TermVector tv(std::initializer_list<std::tuple<long, int, int>> terms) {
  mv::TermVector v;
  for (auto [c, j, i] : terms) v.add(mv::Rational(c), j, i);
  return v;
}

}  // namespace mvtest
