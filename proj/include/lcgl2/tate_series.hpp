#pragma once

// Tate-curve series evaluated at q = p^(2p), and the 2-torsion abscissae of
// the normalized model
//   y^2 = x^3 + (16 a4 - 1/3) x + 64 a6 - (16/3) a4 + 2/27.
//
// Every truncation below is rigorous: a term is dropped only when its
// valuation is known to be >= the working precision M.
//   s_k:          n-th term has valuation 2pn.
//   X(-1, q):     n-th summand has valuation 2pn.
//   X(+-p^p, q):  n-th summand has valuation >= p(2n - 1).

#include <array>
#include <string>

#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"
#include "lcgl2/padic.hpp"

namespace lcgl2 {

struct TateInvariants {
  PadicInt a4;
  PadicInt a6;
};

/// Everything the construction needs from the Tate curve at q = p^(2p).
struct TateBundle {
  unsigned long p;
  int q_exponent;       // 2p
  int sqrt_q_exponent;  // p
  int precision;        // 4p + 1 unless overridden
  PadicInt a4, a6;
  PadicInt x1, x2, x3;        // 2-torsion abscissae on y^2 + xy = x^3 + a4 x + a6
  PadicInt xpp1, xpp2, xpp3;  // the same points after x'' = (36 x + 3) / 9
  // xpp2 - xpp1 = 1 + 8 alpha p^p, xpp3 - xpp1 = 1 - 8 beta p^p,
  // xpp2 - xpp3 = 16 gamma p^p. Known to precision - p digits.
  PadicInt alpha, beta, gamma;
};

inline int construction_precision(unsigned long p) { return 4 * static_cast<int>(p) + 1; }

namespace detail {

inline void require_prime(unsigned long p, unsigned long at_least, const char* who) {
  if (p < at_least || !is_small_prime(p))
    throw PreconditionError(std::string(who) + ": p must be a prime >= " +
                            std::to_string(at_least) + " (got " + std::to_string(p) + ")");
}

// z / (1 - z)^2 modulo m, for z divisible by p.
inline Integer tate_term(const Integer& z, const Integer& m) {
  const Integer one_minus = 1 - z;
  return mod(z * inverse_mod(mod(one_minus * one_minus, m), m), m);
}

}  // namespace detail

/// s_k(q) = sum_{n >= 1} n^k q^n / (1 - q^n) at q = p^(2p), modulo p^M.
inline PadicInt tate_s(unsigned long p, unsigned long k, int precision) {
  detail::require_prime(p, 2, "tate_s");
  if (precision < 1) throw PreconditionError("tate_s: precision must be positive");
  const Integer m = pow_ui(p, static_cast<unsigned long>(precision));
  const Integer q = pow_ui(p, 2 * p);
  Integer sum = 0;
  Integer qn = q;
  for (unsigned long n = 1; 2 * p * n < static_cast<unsigned long>(precision); ++n, qn *= q) {
    const Integer nk = pow_ui(n, k);
    sum += nk * qn * inverse_mod(mod(1 - qn, m), m);
  }
  return {p, precision, sum};
}

/// a4 = -5 s_3, a6 = -(5 s_3 + 7 s_5) / 12.
inline TateInvariants tate_a_invariants(unsigned long p, int precision) {
  detail::require_prime(p, 5, "tate_a_invariants");
  const PadicInt s3 = tate_s(p, 3, precision);
  const PadicInt s5 = tate_s(p, 5, precision);
  const PadicInt inv12 = PadicInt::from_rational(1, 12, p, precision);
  return {-(s3 * Integer(5)), -((s3 * Integer(5) + s5 * Integer(7)) * inv12)};
}

/// x-coordinate X(u, q) of a nontrivial 2-torsion point: which = 1, 2, 3 for
/// u = -1, q^(1/2), -q^(1/2) with q^(1/2) = p^p.
inline PadicInt two_torsion_x(unsigned long p, int which, int precision) {
  detail::require_prime(p, 5, "two_torsion_x");
  if (which < 1 || which > 3) throw PreconditionError("two_torsion_x: which must be 1, 2 or 3");
  if (precision < 1) throw PreconditionError("two_torsion_x: precision must be positive");
  const Integer m = pow_ui(p, static_cast<unsigned long>(precision));
  const auto M = static_cast<unsigned long>(precision);
  using detail::tate_term;

  if (which == 1) {
    const Integer q = pow_ui(p, 2 * p);
    Integer sum = mod(Integer(-1) * inverse_mod(4, m), m);
    Integer qn = q;
    for (unsigned long n = 1; 2 * p * n < M; ++n, qn *= q)
      sum += 2 * tate_term(-qn, m) - 2 * tate_term(qn, m);
    return {p, precision, sum};
  }

  const Integer w = pow_ui(p, p);
  const int sign = which == 2 ? 1 : -1;
  Integer sum = tate_term(sign * w, m);
  for (unsigned long n = 1; p * (2 * n - 1) < M; ++n) {
    const Integer w_odd_hi = pow(w, 2 * n + 1);
    const Integer w_odd_lo = pow(w, 2 * n - 1);
    const Integer w_even = pow(w, 2 * n);
    sum += tate_term(sign * w_odd_hi, m) + tate_term(sign * w_odd_lo, m) -
           2 * tate_term(w_even, m);
  }
  return {p, precision, sum};
}

namespace detail {

inline PadicInt unit_factor(const PadicInt& difference, unsigned long p, long scale,
                            const char* name) {
  const int e = static_cast<int>(p);
  const Valuation v = difference.valuation();
  if (v.exact && v.value < e)
    throw InvariantError(std::string("build_bundle: ") + name + " difference has valuation " +
                         std::to_string(v.value) + " < p");
  return difference.div_pow_p(e) *
         PadicInt::from_rational(1, scale, p, difference.precision() - e);
}

}  // namespace detail

inline TateBundle build_bundle(unsigned long p, int precision) {
  detail::require_prime(p, 5, "build_bundle");
  if (precision <= static_cast<int>(p))
    throw PreconditionError("build_bundle: precision must exceed p");
  const TateInvariants ai = tate_a_invariants(p, precision);
  const PadicInt x1 = two_torsion_x(p, 1, precision);
  const PadicInt x2 = two_torsion_x(p, 2, precision);
  const PadicInt x3 = two_torsion_x(p, 3, precision);
  const PadicInt inv9 = PadicInt::from_rational(1, 9, p, precision);
  const auto normalize = [&](const PadicInt& x) { return (x * Integer(36) + Integer(3)) * inv9; };
  const PadicInt xpp1 = normalize(x1);
  const PadicInt xpp2 = normalize(x2);
  const PadicInt xpp3 = normalize(x3);

  PadicInt alpha = detail::unit_factor(xpp2 - xpp1 - Integer(1), p, 8, "alpha");
  PadicInt beta = -detail::unit_factor(xpp3 - xpp1 - Integer(1), p, 8, "beta");
  PadicInt gamma = detail::unit_factor(xpp2 - xpp3, p, 16, "gamma");

  return TateBundle{p,
                    2 * static_cast<int>(p),
                    static_cast<int>(p),
                    precision,
                    ai.a4,
                    ai.a6,
                    x1,
                    x2,
                    x3,
                    xpp1,
                    xpp2,
                    xpp3,
                    std::move(alpha),
                    std::move(beta),
                    std::move(gamma)};
}

inline TateBundle build_bundle(unsigned long p) {
  return build_bundle(p, construction_precision(p));
}

/// Coefficients of x^3 + A x + B whose roots are the xpp_i.
struct NormalizedCubic {
  PadicInt linear;    // 16 a4 - 1/3
  PadicInt constant;  // 64 a6 - (16/3) a4 + 2/27
};

inline NormalizedCubic normalized_cubic(const TateInvariants& ai) {
  const unsigned long p = ai.a4.prime();
  const int n = std::min(ai.a4.precision(), ai.a6.precision());
  const PadicInt third = PadicInt::from_rational(1, 3, p, n);
  return {ai.a4 * Integer(16) - third,
          ai.a6 * Integer(64) - ai.a4 * Integer(16) * third +
              PadicInt::from_rational(2, 27, p, n)};
}

/// Independent route to (xpp1, xpp2, xpp3): roots of the normalized cubic.
/// The simple root near -2/3 is Newton-lifted; the other two are split off by
/// deflation and an even-valuation square root of the quadratic's discriminant,
/// then re-confirmed by a Hensel lift with tau = p.
inline std::array<PadicInt, 3> oracle_cubic_roots(unsigned long p, int precision) {
  detail::require_prime(p, 5, "oracle_cubic_roots");
  const int e = static_cast<int>(p);
  if (precision <= e) throw PreconditionError("oracle_cubic_roots: precision must exceed p");
  const int guard = precision + e;

  const NormalizedCubic cubic = normalized_cubic(tate_a_invariants(p, guard));
  const IntPolynomial f({cubic.constant.residue(), cubic.linear.residue(), Integer(0), Integer(1)});
  const Integer P(p);

  const Integer inv3 = inverse_mod(3, P);
  const PadicInt x1 = hensel_lift(f, mod(-2 * inv3, P), p, 1, 0, guard);

  // (x - x1)(x^2 + x1 x + x1^2 + A): discriminant -3 x1^2 - 4A = (x2 - x3)^2.
  const PadicInt disc = -(x1 * x1 * Integer(3)) - cubic.linear * Integer(4);
  const Valuation vd = disc.valuation();
  if (!vd.exact || vd.value != 2 * e)
    throw InvariantError("oracle_cubic_roots: roots near 1/3 not separated at level p^p (v=" +
                         std::to_string(vd.value) + ")");
  const PadicInt root_disc = sqrt(disc, 16);  // (x2 - x3) = 16 gamma p^p, gamma = 1 mod p
  const PadicInt half = PadicInt::from_rational(1, 2, p, precision);
  const PadicInt base = -x1.truncate(precision);
  PadicInt x2 = (base + root_disc) * half;
  PadicInt x3 = (base - root_disc) * half;

  const PadicInt third = PadicInt::from_rational(1, 3, p, precision);
  const PadicInt lead = (x2 - third).div_pow_p(e);
  if (mod_ui(lead.residue(), p) != 8 % p)
    throw InvariantError("oracle_cubic_roots: root ordering convention violated");

  for (const PadicInt* r : {&x2, &x3}) {
    const Integer approx = mod(r->residue(), pow_ui(p, 2 * p + 1));
    const PadicInt lifted = hensel_lift(f, approx, p, 2 * e + 1, e, precision);
    if (!(lifted == *r))
      throw InvariantError("oracle_cubic_roots: Hensel confirmation disagrees with deflation");
  }
  return {x1.truncate(precision), std::move(x2), std::move(x3)};
}

}  // namespace lcgl2
