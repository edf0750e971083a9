#pragma once

// Thin helpers over GMP's C++ interface. Everything in the library that
// can exceed 64 bits is an Integer or a Rational.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lcgl2/errors.hpp"

namespace lcgl2 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow_ui(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline unsigned long mod_ui(const Integer& a, unsigned long m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Inverse of a modulo m; throws NotAUnit when gcd(a, m) != 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotAUnit("no inverse of " + a.get_str() + " modulo " + m.get_str());
  return mod(r, m);
}

/// v_p(n) for n != 0. Zero has no finite valuation and yields nullopt.
inline std::optional<unsigned long> valuation(const Integer& n, const Integer& p) {
  if (n == 0) return std::nullopt;
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline std::optional<long> valuation(const Rational& x, const Integer& p) {
  if (x == 0) return std::nullopt;
  return static_cast<long>(*valuation(x.get_num(), p)) -
         static_cast<long>(*valuation(x.get_den(), p));
}

inline bool integral_at(const Rational& x, const Integer& p) {
  return !divides(p, x.get_den());
}

/// Image of a p-integral rational in Z / m.
inline Integer reduce_rational(const Rational& x, const Integer& m) {
  return mod(x.get_num() * inverse_mod(x.get_den(), m), m);
}

/// Unique solution mod m1*m2 of x = r1 (m1), x = r2 (m2) for coprime moduli.
inline Integer crt(const Integer& r1, const Integer& m1, const Integer& r2, const Integer& m2) {
  const Integer k = mod((r2 - r1) * inverse_mod(m1, m2), m2);
  return mod(r1 + m1 * k, m1 * m2);
}

inline std::string to_decimal(const Integer& n) { return n.get_str(10); }

/// Strict decimal parse: optional leading '-', then digits only.
inline std::optional<Integer> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) return std::nullopt;
  for (std::size_t k = i; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') return std::nullopt;
  Integer n;
  if (n.set_str(std::string(text), 10) != 0) return std::nullopt;
  return n;
}

inline std::string to_string(const Rational& x) { return x.get_str(10); }

/// Trial-division primality for small machine integers.
constexpr bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace lcgl2
