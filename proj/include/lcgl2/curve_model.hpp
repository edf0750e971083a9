#pragma once

// Long Weierstrass models y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"

namespace lcgl2 {

struct Invariants {
  Rational b2, b4, b6, b8;
  Rational c4, c6;
  Rational delta;
};

inline Invariants compute_invariants(const Rational& a1, const Rational& a2, const Rational& a3,
                                     const Rational& a4, const Rational& a6) {
  Invariants in;
  in.b2 = a1 * a1 + 4 * a2;
  in.b4 = 2 * a4 + a1 * a3;
  in.b6 = a3 * a3 + 4 * a6;
  in.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  in.c4 = in.b2 * in.b2 - 24 * in.b4;
  in.c6 = -in.b2 * in.b2 * in.b2 + 36 * in.b2 * in.b4 - 216 * in.b6;
  in.delta = -in.b2 * in.b2 * in.b8 - 8 * in.b4 * in.b4 * in.b4 - 27 * in.b6 * in.b6 +
             9 * in.b2 * in.b4 * in.b6;
  return in;
}

class CurveModel {
 public:
  CurveModel(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
      : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)},
        inv_(compute_invariants(a_[0], a_[1], a_[2], a_[3], a_[4])) {
    if (inv_.delta == 0) throw SingularCurve("singular Weierstrass model (discriminant 0)");
  }

  /// y^2 = (x - a)(x - b)(x - c)
  static CurveModel split(const Integer& a, const Integer& b, const Integer& c) {
    return {0, Rational(-(a + b + c)), 0, Rational(a * b + b * c + c * a), Rational(-(a * b * c))};
  }

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  const std::array<Rational, 5>& coefficients() const { return a_; }

  const Invariants& invariants() const { return inv_; }
  const Rational& discriminant() const { return inv_.delta; }
  const Rational& c4() const { return inv_.c4; }
  Rational j() const { return inv_.c4 * inv_.c4 * inv_.c4 / inv_.delta; }

  bool integral() const {
    for (const auto& a : a_)
      if (a.get_den() != 1) return false;
    return true;
  }
  bool integral_at(const Integer& prime) const {
    for (const auto& a : a_)
      if (!lcgl2::integral_at(a, prime)) return false;
    return true;
  }

  friend bool operator==(const CurveModel& x, const CurveModel& y) { return x.a_ == y.a_; }

 private:
  std::array<Rational, 5> a_;
  Invariants inv_;
};

/// Admissible change x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct ChangeOfVariables {
  Rational u = 1, r = 0, s = 0, t = 0;

  /// Apply *this first, then `next` to the resulting model.
  ChangeOfVariables then(const ChangeOfVariables& next) const {
    return {u * next.u, r + u * u * next.r, s + u * next.s,
            t + u * u * s * next.r + u * u * u * next.t};
  }
};

inline CurveModel transform(const CurveModel& m, const ChangeOfVariables& g) {
  if (g.u == 0) throw PreconditionError("transform: u must be nonzero");
  const Rational &u = g.u, &r = g.r, &s = g.s, &t = g.t;
  const Rational &a1 = m.a1(), &a2 = m.a2(), &a3 = m.a3(), &a4 = m.a4(), &a6 = m.a6();
  const Rational u2 = u * u;
  const Rational u3 = u2 * u;
  const Rational u4 = u2 * u2;
  const Rational u6 = u3 * u3;
  return {(a1 + 2 * s) / u, (a2 - s * a1 + 3 * r - s * s) / u2, (a3 + r * a1 + 2 * t) / u3,
          (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
          (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6};
}

struct SplitInvariants {
  Integer delta;       // 16 (a-b)^2 (b-c)^2 (c-a)^2
  Integer c4_reduced;  // standard c4 / 16
};

inline SplitInvariants split_delta_and_reduced_c4(const Integer& a, const Integer& b,
                                                  const Integer& c) {
  if (a == b || b == c || a == c) throw SingularCurve("split model with a repeated root");
  const Integer ab = a - b, bc = b - c, ca = c - a;
  return {16 * ab * ab * bc * bc * ca * ca, a * a + b * b + c * c - a * b - b * c - c * a};
}

/// x = 4x' + 1, y = 8y' + 4x'. Makes y^2 = (x - 64t1)(x - 1 - 64t2)(x - 17 - 64t3)
/// integral with odd discriminant.
inline const ChangeOfVariables kTwoAdicChange{2, 1, 1, 0};

/// x = 4x' + 1/3, y = 8y' + 4x'. Takes a split model with roots near
/// (-2/3, 1/3, 1/3) to the y^2 + xy form used at p.
inline const ChangeOfVariables kTateChange{2, Rational(1, 3), 1, 0};

inline CurveModel two_model(const Integer& a0, const Integer& b0, const Integer& c0) {
  if (mod(a0, 64) != 0 || mod(b0, 64) != 1 || mod(c0, 64) != 17)
    throw PreconditionError("two_model: need a0 = 0, b0 = 1, c0 = 17 (mod 64)");
  CurveModel m = transform(CurveModel::split(a0, b0, c0), kTwoAdicChange);
  if (!m.integral()) throw InvariantError("two_model: transformed model is not integral");
  return m;
}

enum class ReductionKind { good, multiplicative, additive_or_undetermined };

inline const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::good: return "good";
    case ReductionKind::multiplicative: return "multiplicative";
    case ReductionKind::additive_or_undetermined: return "additive-or-undetermined";
  }
  return "?";
}

struct ReductionType {
  Integer prime;
  ReductionKind kind;
  long v_delta;
  std::optional<long> v_c4;  // nullopt when c4 = 0
  bool minimal;
};

/// Classification using only the minimality shortcut: an integral model with
/// v(c4) < 4 or v(delta) < 12 is minimal. No Tate's algorithm.
inline ReductionType reduction_type(const CurveModel& m, const Integer& prime,
                                    bool already_minimal = false) {
  if (!m.integral_at(prime))
    throw PreconditionError("reduction_type: model not integral at " + prime.get_str());
  const long vd = *valuation(m.discriminant(), prime);
  const std::optional<long> vc = valuation(m.c4(), prime);
  const bool minimal = already_minimal || vd < 12 || (vc && *vc < 4);
  ReductionKind kind = ReductionKind::additive_or_undetermined;
  if (minimal && vd == 0)
    kind = ReductionKind::good;
  else if (minimal && vc && *vc == 0)
    kind = ReductionKind::multiplicative;
  return {prime, kind, vd, vc, minimal};
}

inline constexpr unsigned long kPointCountBound = 1'000'000;

/// #E(F_ell) by enumerating x and a table of squares; ell odd, good reduction.
inline std::uint64_t count_points_mod_ell(const CurveModel& m, unsigned long ell,
                                          unsigned long bound = kPointCountBound) {
  if (ell > bound) throw PreconditionError("count_points_mod_ell: ell above enumeration bound");
  if (ell < 3 || !is_small_prime(ell))
    throw PreconditionError("count_points_mod_ell: ell must be an odd prime");
  const Integer L(ell);
  if (!m.integral_at(L))
    throw PreconditionError("count_points_mod_ell: model not integral at " + std::to_string(ell));
  if (divides(L, m.discriminant().get_num()))
    throw PreconditionError("count_points_mod_ell: bad reduction at " + std::to_string(ell));

  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  const auto& in = m.invariants();
  const auto red = [&](const Rational& x) { return mod_ui(reduce_rational(x, L), ell); };
  const std::uint64_t b2 = red(in.b2), b4 = red(in.b4), b6 = red(in.b6), n = ell;

  std::vector<signed char> chi(ell, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y < n; ++y) chi[y * y % n] = 1;

  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t x2 = x * x % n;
    const std::uint64_t rhs = (4 * x2 % n * x + b2 * x2 + 2 * b4 % n * x + b6) % n;
    count += static_cast<std::uint64_t>(1 + chi[rhs]);
  }
  return count;
}

/// |ell + 1 - count| <= 2 sqrt(ell), checked in integers.
inline bool within_hasse_bound(std::uint64_t count, unsigned long ell) {
  const long long a = static_cast<long long>(ell) + 1 - static_cast<long long>(count);
  return static_cast<unsigned long long>(a * a) <= 4ULL * ell;
}

}  // namespace lcgl2
