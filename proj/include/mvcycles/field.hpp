#pragma once

// Scalar fields for the lattice algebra: exact rationals (GMP) and a
// Mersenne-prime field used for randomized cross-checks.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mv {

using Rational = mpq_class;

/// mpq_class has no long long constructor; long is 64 bits on the supported targets.
inline Rational rat(long long v) { return Rational(static_cast<long>(v)); }

/// Integers modulo p = 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

  ModP() = default;
  ModP(long long x) : v_(reduce_signed(x)) {}  // NOLINT(google-explicit-constructor)

  /// Maps a rational into the field; a denominator divisible by p is rejected.
  explicit ModP(const Rational& q) {
    ModP num = from_mpz(q.get_num());
    ModP den = from_mpz(q.get_den());
    if (den.v_ == 0) throw std::domain_error("denominator vanishes modulo p");
    *this = num / den;
  }

  std::uint64_t value() const { return v_; }

  friend ModP operator+(ModP a, ModP b) { return raw(add(a.v_, b.v_)); }
  friend ModP operator-(ModP a, ModP b) { return raw(add(a.v_, P - b.v_)); }
  friend ModP operator-(ModP a) { return raw(a.v_ == 0 ? 0 : P - a.v_); }
  friend ModP operator*(ModP a, ModP b) { return raw(mul(a.v_, b.v_)); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in ModP");
    std::uint64_t base = v_, e = P - 2, acc = 1;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return raw(acc);
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

 private:
  static ModP raw(std::uint64_t v) {
    ModP m;
    m.v_ = v;
    return m;
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & P);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    return add(lo, hi);
  }
  static std::uint64_t reduce_signed(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    return static_cast<std::uint64_t>(r);
  }
  static ModP from_mpz(const mpz_class& z) {
    mpz_class r = z % mpz_class(std::to_string(P));
    if (r < 0) r += mpz_class(std::to_string(P));
    return raw(static_cast<std::uint64_t>(std::stoull(r.get_str())));
  }

  std::uint64_t v_ = 0;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& a) { return a.value() == 0; }

template <class F>
F field_from(const Rational& q);

template <>
inline Rational field_from<Rational>(const Rational& q) {
  return q;
}

template <>
inline ModP field_from<ModP>(const Rational& q) {
  return ModP(q);
}

}  // namespace mv
