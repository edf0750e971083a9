#pragma once

// Primality testing with recorded evidence.
//
//   n < 2^64   Miller-Rabin with the first twelve prime bases (deterministic
//              far beyond 2^64).
//   otherwise  Baillie-PSW (strong base-2 test + strong Lucas, Selfridge
//              parameters) followed by extra strong rounds on small prime bases.
//
// Trial division up to `trial_bound` always runs first.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcgl2/integer.hpp"

namespace lcgl2 {

enum class Verdict { prime_deterministic, probable_prime, composite };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::prime_deterministic: return "prime-deterministic";
    case Verdict::probable_prime: return "probable-prime";
    case Verdict::composite: return "composite";
  }
  return "?";
}

inline std::optional<Verdict> parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::prime_deterministic, Verdict::probable_prime, Verdict::composite})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

struct PrimalityEvidence {
  Integer n;
  Verdict verdict = Verdict::composite;
  std::string method;
  std::vector<unsigned long> witnesses;  // bases used, or the factor / failing base
  bool trivial = false;                  // n < 2

  bool passes() const { return verdict != Verdict::composite; }
  friend bool operator==(const PrimalityEvidence&, const PrimalityEvidence&) = default;
};

struct PrimalityOptions {
  unsigned long trial_bound = 1000;
  unsigned extra_rounds = 6;
};

/// All primes <= limit (sieve of Eratosthenes).
inline std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

namespace detail {

inline const std::vector<unsigned long>& prime_table() {
  static const std::vector<unsigned long> table = primes_up_to(1UL << 16);
  return table;
}

inline std::vector<unsigned long> primes_through(unsigned long limit) {
  if (limit <= (1UL << 16)) {
    const auto& t = prime_table();
    return {t.begin(), std::upper_bound(t.begin(), t.end(), limit)};
  }
  return primes_up_to(limit);
}

}  // namespace detail

/// Strong probable-prime test to base `base`; n odd and > 2.
inline bool strong_probable_prime(const Integer& n, unsigned long base) {
  const Integer n1 = n - 1;
  const auto s = mpz_scan1(n1.get_mpz_t(), 0);
  Integer d;
  mpz_tdiv_q_2exp(d.get_mpz_t(), n1.get_mpz_t(), s);
  const Integer a = mod(Integer(base), n);
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = mod(x * x, n);
    if (x == n1) return true;
  }
  return false;
}

/// Strong Lucas probable-prime test with Selfridge's method A (P = 1).
inline bool strong_lucas_probable_prime(const Integer& n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  long D = 5;
  for (;;) {
    const int jac = mpz_jacobi(Integer(D).get_mpz_t(), n.get_mpz_t());
    if (jac == -1) break;
    if (jac == 0 && Integer(D < 0 ? -D : D) != n) return false;
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const Integer Dz(D);
  const Integer Q = mod(Integer((1 - D) / 4), n);

  Integer d = n + 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  const auto halve = [&n](Integer x) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return mod(x, n);
  };

  Integer U = 1, V = 1, Qk = Q;
  for (auto bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
    U = mod(U * V, n);
    V = mod(V * V - 2 * Qk, n);
    Qk = mod(Qk * Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      Integer u2 = halve(U + V);
      Integer v2 = halve(Dz * U + V);
      U = std::move(u2);
      V = std::move(v2);
      Qk = mod(Qk * Q, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod(Qk * Qk, n);
  }
  return false;
}

inline PrimalityEvidence is_prime(const Integer& n, const PrimalityOptions& opt = {}) {
  PrimalityEvidence ev;
  ev.n = n;
  if (n < 2) {
    ev.method = "trivial";
    ev.trivial = true;
    return ev;
  }

  for (unsigned long p : detail::primes_through(opt.trial_bound)) {
    if (n == p) {
      ev.verdict = Verdict::prime_deterministic;
      ev.method = "trial-division";
      return ev;
    }
    if (mod_ui(n, p) == 0) {
      ev.method = "trial-division";
      ev.witnesses = {p};
      return ev;
    }
  }
  if (n <= Integer(opt.trial_bound) * Integer(opt.trial_bound)) {
    ev.verdict = Verdict::prime_deterministic;
    ev.method = "trial-division";
    return ev;
  }

  static constexpr unsigned long kBases64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned long a : kBases64) {
      if (!strong_probable_prime(n, a)) {
        ev.method = "miller-rabin";
        ev.witnesses = {a};
        return ev;
      }
    }
    ev.verdict = Verdict::prime_deterministic;
    ev.method = "miller-rabin-64";
    ev.witnesses.assign(std::begin(kBases64), std::end(kBases64));
    return ev;
  }

  if (!strong_probable_prime(n, 2)) {
    ev.method = "miller-rabin";
    ev.witnesses = {2};
    return ev;
  }
  if (!strong_lucas_probable_prime(n)) {
    ev.method = "strong-lucas";
    return ev;
  }
  std::vector<unsigned long> bases{2};
  const auto& table = detail::prime_table();
  for (unsigned i = 0; i < opt.extra_rounds; ++i) {
    const unsigned long a = table[i + 1];
    if (!strong_probable_prime(n, a)) {
      ev.method = "miller-rabin";
      ev.witnesses = {a};
      return ev;
    }
    bases.push_back(a);
  }
  ev.verdict = Verdict::probable_prime;
  ev.method = "bpsw+mr";
  ev.witnesses = std::move(bases);
  return ev;
}

}  // namespace lcgl2
