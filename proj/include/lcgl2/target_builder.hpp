#pragma once

// Congruence targets and the three affine linear forms whose simultaneous
// prime values give the curve y^2 = (x - a0)(x - b0)(x - c0).

#include <array>
#include <string>

#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"
#include "lcgl2/padic.hpp"
#include "lcgl2/tate_series.hpp"

namespace lcgl2 {

/// constant + cx * X + cy * Y
struct LinearForm {
  Integer constant;
  Integer cx;
  Integer cy;

  Integer operator()(const Integer& x, const Integer& y) const { return constant + cx * x + cy * y; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct LinearFormTriple {
  LinearForm q1;  // s1 + 64 p^r X
  LinearForm q2;  // s2 + 64 p^r Y
  LinearForm q3;  // (s1 - s2) / (16 p^p) + 4 p^(r-p) (X - Y)
};

struct CongruenceTarget {
  unsigned long p;
  int r;
  Integer modulus;  // 64 p^r
  Integer s1;       // 1 mod 64, xpp2 - xpp1 mod p^r
  Integer s2;       // 17 mod 64, xpp3 - xpp1 mod p^r
  Integer a0_residue;  // 0 mod 64, xpp1 mod p^r
  Integer q3_constant;  // (s1 - s2) / (16 p^p)
  std::array<Integer, 3> xpp;  // xpp_i mod p^r

  friend bool operator==(const CongruenceTarget&, const CongruenceTarget&) = default;
};

inline CongruenceTarget build_targets(const TateBundle& bundle) {
  const unsigned long p = bundle.p;
  const int r = construction_precision(p);
  if (bundle.precision < r)
    throw PreconditionError("build_targets: bundle precision below 4p+1");
  const Integer pr = pow_ui(p, static_cast<unsigned long>(r));
  const Integer sixty_four = 64;

  CongruenceTarget t;
  t.p = p;
  t.r = r;
  t.modulus = sixty_four * pr;
  t.xpp = {mod(bundle.xpp1.residue(), pr), mod(bundle.xpp2.residue(), pr),
           mod(bundle.xpp3.residue(), pr)};
  t.s1 = crt(1, sixty_four, mod(t.xpp[1] - t.xpp[0], pr), pr);
  t.s2 = crt(17, sixty_four, mod(t.xpp[2] - t.xpp[0], pr), pr);
  t.a0_residue = crt(0, sixty_four, t.xpp[0], pr);

  const Integer step = 16 * pow_ui(p, p);
  const Integer diff = t.s1 - t.s2;
  if (!divides(step, diff))
    throw InvariantError("build_targets: 16 p^p does not divide s1 - s2 (series inconsistency)");
  t.q3_constant = diff / step;
  if (mod_ui(t.q3_constant, p) != 1)
    throw InvariantError("build_targets: (s1 - s2) / (16 p^p) is not 1 mod p");
  return t;
}

inline LinearFormTriple linear_forms(const CongruenceTarget& t) {
  const Integer c12 = t.modulus;
  const Integer c3 = 4 * pow_ui(t.p, static_cast<unsigned long>(t.r) - t.p);
  return {{t.s1, c12, 0}, {t.s2, 0, c12}, {t.q3_constant, c3, -c3}};
}

/// No two forms have proportional (X, Y) parts.
inline bool pairwise_independent(const LinearFormTriple& f) {
  const std::array<const LinearForm*, 3> fs{&f.q1, &f.q2, &f.q3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (fs[i]->cx * fs[j]->cy - fs[i]->cy * fs[j]->cx == 0) return false;
  return true;
}

/// For each prime in {2, 3, 5, p} dividing both coefficients of a form, the
/// constant must be prime to it (otherwise every value is divisible by it).
inline bool admissible(const LinearFormTriple& f, unsigned long p) {
  for (const LinearForm* form : {&f.q1, &f.q2, &f.q3}) {
    for (unsigned long ell : {2UL, 3UL, 5UL, p}) {
      const Integer L(ell);
      if (divides(L, form->cx) && divides(L, form->cy) && divides(L, form->constant)) return false;
    }
  }
  return true;
}

struct CurveTriple {
  Integer a0, b0, c0;
  Integer q1, q2, q3;
};

inline CurveTriple assemble_curve(const CongruenceTarget& t, const Integer& x0, const Integer& y0) {
  const LinearFormTriple f = linear_forms(t);
  CurveTriple c;
  c.q1 = f.q1(x0, y0);
  c.q2 = f.q2(x0, y0);
  c.q3 = f.q3(x0, y0);
  if (c.q1 <= 0 || c.q2 <= 0 || c.q3 <= 0)
    throw PreconditionError("assemble_curve: a form value is not positive at (" + x0.get_str() +
                            ", " + y0.get_str() + ")");
  c.a0 = t.a0_residue;
  c.b0 = c.a0 + c.q1;
  c.c0 = c.a0 + c.q2;
  if (c.b0 - c.c0 != 16 * pow_ui(t.p, t.p) * c.q3)
    throw InvariantError("assemble_curve: b0 - c0 != 16 p^p q3");
  return c;
}

}  // namespace lcgl2
