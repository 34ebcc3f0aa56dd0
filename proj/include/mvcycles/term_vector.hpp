#pragma once

// Finite sums Σ c·t^j e_i with exact rational coefficients.

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvcycles/field.hpp"

namespace mv {

class TermVector {
 public:
  using Key = std::pair<int, int>;  // (degree j, column i)

  TermVector() = default;

  static TermVector monomial(int degree, int column, const Rational& c = 1) {
    TermVector v;
    v.add(c, degree, column);
    return v;
  }

  /// Adds c·t^j e_i, dropping the term if it cancels.
  TermVector& add(const Rational& c, int degree, int column) {
    if (column < 1) throw std::invalid_argument("column index must be positive");
    if (is_zero(c)) return *this;
    auto [it, fresh] = terms_.emplace(Key{degree, column}, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
    return *this;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  int min_degree() const {
    int m = INT_MAX;
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    return m;
  }
  int max_degree() const {
    int m = INT_MIN;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
  }
  int max_column() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
  }

  /// Multiplies by t^s.
  TermVector mul_t(int s) const {
    TermVector out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first + s, k.second}, c);
    return out;
  }

  /// Keeps only the terms in one column.
  TermVector project(int column) const {
    TermVector out;
    for (const auto& [k, c] : terms_)
      if (k.second == column) out.terms_.emplace(k, c);
    return out;
  }

  TermVector& operator+=(const TermVector& o) {
    for (const auto& [k, c] : o.terms_) add(c, k.first, k.second);
    return *this;
  }
  TermVector& operator-=(const TermVector& o) {
    for (const auto& [k, c] : o.terms_) add(-c, k.first, k.second);
    return *this;
  }
  friend TermVector operator+(TermVector a, const TermVector& b) { return a += b; }
  friend TermVector operator-(TermVector a, const TermVector& b) { return a -= b; }
  friend TermVector operator*(const Rational& s, const TermVector& v) {
    TermVector out;
    if (is_zero(s)) return out;
    for (const auto& [k, c] : v.terms_) out.terms_.emplace(k, s * c);
    return out;
  }
  friend bool operator==(const TermVector&, const TermVector&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string cs = c.get_str();
      if (!first) s += (cs[0] == '-') ? " - " : " + ";
      if (!first && cs[0] == '-') cs.erase(0, 1);
      first = false;
      s += cs + "*t^" + std::to_string(k.first) + "e" + std::to_string(k.second);
    }
    return s;
  }

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace mv
