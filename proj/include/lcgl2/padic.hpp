#pragma once

// Truncated p-adic integers: a residue modulo p^N together with the
// precision N. Precision only ever shrinks through arithmetic, except for
// multiplication by an exact power of p, which gains exactly that many digits.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"

namespace lcgl2 {

/// Result of PadicInt::valuation. A zero residue only bounds the valuation
/// from below by the precision; `exact` is false in that case.
struct Valuation {
  int value = 0;
  bool exact = true;

  bool is_infinite() const { return !exact; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

class PadicInt {
 public:
  PadicInt(unsigned long prime, int precision, const Integer& value)
      : prime_(prime), precision_(precision) {
    if (prime < 2) throw PreconditionError("p-adic prime must be >= 2");
    if (precision < 1) throw PreconditionError("p-adic precision must be positive");
    modulus_ = pow_ui(prime, static_cast<unsigned long>(precision));
    residue_ = mod(value, modulus_);
  }

  static PadicInt zero(unsigned long prime, int precision) { return {prime, precision, 0}; }
  static PadicInt one(unsigned long prime, int precision) { return {prime, precision, 1}; }

  /// num / den embedded in Z_p; den must be prime to p.
  static PadicInt from_rational(const Integer& num, const Integer& den, unsigned long prime,
                                int precision) {
    if (den == 0 || divides(Integer(prime), den))
      throw NotAUnit("denominator " + den.get_str() + " is divisible by " +
                     std::to_string(prime));
    PadicInt d(prime, precision, den);
    return PadicInt(prime, precision, num) * d.inv();
  }

  static PadicInt from_rational(const Rational& x, unsigned long prime, int precision) {
    return from_rational(x.get_num(), x.get_den(), prime, precision);
  }

  unsigned long prime() const { return prime_; }
  int precision() const { return precision_; }
  const Integer& residue() const { return residue_; }
  const Integer& modulus() const { return modulus_; }

  Valuation valuation() const {
    if (residue_ == 0) return {precision_, false};
    return {static_cast<int>(*lcgl2::valuation(residue_, Integer(prime_))), true};
  }

  bool is_unit() const { return mod_ui(residue_, prime_) != 0; }

  PadicInt inv() const {
    if (!is_unit())
      throw NotAUnit("p-adic inverse of a non-unit (" + residue_.get_str() + " mod " +
                     std::to_string(prime_) + "^" + std::to_string(precision_) + ")");
    return {prime_, precision_, inverse_mod(residue_, modulus_)};
  }

  /// Same value known to fewer digits.
  PadicInt truncate(int precision) const {
    if (precision > precision_)
      throw PreconditionError("cannot raise precision by truncation");
    return {prime_, precision, residue_};
  }

  /// Exact division by p^k. Loses k digits; the residue must be divisible by p^k.
  PadicInt div_pow_p(int k) const {
    if (k < 0) throw PreconditionError("negative shift");
    if (k >= precision_)
      throw PreconditionError("shift by " + std::to_string(k) + " exhausts precision " +
                              std::to_string(precision_));
    const Integer pk = pow_ui(prime_, static_cast<unsigned long>(k));
    if (!divides(pk, residue_))
      throw PreconditionError("value not divisible by " + std::to_string(prime_) + "^" +
                              std::to_string(k));
    return {prime_, precision_ - k, residue_ / pk};
  }

  /// Multiplication by p^k. Gains k digits.
  PadicInt mul_pow_p(int k) const {
    if (k < 0) throw PreconditionError("negative shift");
    return {prime_, precision_ + k, residue_ * pow_ui(prime_, static_cast<unsigned long>(k))};
  }

  /// Base-p digits, least significant first, exactly precision() of them.
  std::vector<unsigned long> digits() const {
    std::vector<unsigned long> out;
    out.reserve(static_cast<std::size_t>(precision_));
    Integer rest = residue_;
    for (int i = 0; i < precision_; ++i) {
      out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime_));
    }
    return out;
  }

  /// "c0 + c1*p + c2*p^2 + ... + O(p^k)" with zero digits omitted.
  std::string expansion(int max_digits) const {
    const int k = std::min(max_digits, precision_);
    const auto ds = digits();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < k; ++i) {
      const auto d = ds[static_cast<std::size_t>(i)];
      if (d == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << d;
      } else {
        os << d << '*' << prime_;
        if (i > 1) os << '^' << i;
      }
    }
    if (!first) os << " + ";
    os << "O(" << prime_ << '^' << k << ')';
    return os.str();
  }

  /// True when both values agree modulo p^k; k may not exceed either precision.
  bool congruent(const PadicInt& other, int k) const {
    check_same_prime(other);
    if (k > precision_ || k > other.precision_)
      throw PreconditionError("congruence level exceeds precision");
    const Integer pk = pow_ui(prime_, static_cast<unsigned long>(k));
    return divides(pk, residue_ - other.residue_);
  }

  PadicInt operator-() const { return {prime_, precision_, -residue_}; }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    a.check_same_prime(b);
    return {a.prime_, std::min(a.precision_, b.precision_), a.residue_ + b.residue_};
  }
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    a.check_same_prime(b);
    return {a.prime_, std::min(a.precision_, b.precision_), a.residue_ - b.residue_};
  }
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    a.check_same_prime(b);
    return {a.prime_, std::min(a.precision_, b.precision_), a.residue_ * b.residue_};
  }

  // Exact integers carry infinite precision.
  friend PadicInt operator+(const PadicInt& a, const Integer& b) {
    return {a.prime_, a.precision_, a.residue_ + b};
  }
  friend PadicInt operator-(const PadicInt& a, const Integer& b) {
    return {a.prime_, a.precision_, a.residue_ - b};
  }
  friend PadicInt operator*(const PadicInt& a, const Integer& b) {
    return {a.prime_, a.precision_, a.residue_ * b};
  }
  friend PadicInt operator*(const Integer& b, const PadicInt& a) { return a * b; }

  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

 private:
  void check_same_prime(const PadicInt& other) const {
    if (prime_ != other.prime_)
      throw PrimeMismatch("p-adic prime mismatch: " + std::to_string(prime_) + " vs " +
                          std::to_string(other.prime_));
  }

  unsigned long prime_;
  int precision_;
  Integer modulus_;
  Integer residue_;
};

inline std::ostream& operator<<(std::ostream& os, const PadicInt& a) {
  return os << a.residue() << " (mod " << a.prime() << '^' << a.precision() << ')';
}

/// Polynomial with integer coefficients, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  /// x^n - c
  static IntPolynomial binomial(unsigned n, const Integer& c) {
    std::vector<Integer> cs(n + 1, Integer(0));
    cs[0] = -c;
    cs[n] = 1;
    return IntPolynomial(std::move(cs));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Integer eval_mod(const Integer& x, const Integer& m) const {
    Integer acc = 0;
    const Integer xm = mod(x, m);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mod(acc * xm + *it, m);
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Integer(i));
    return IntPolynomial(std::move(d));
  }

 private:
  std::vector<Integer> coeffs_;
};

namespace detail {

// v_p(n mod p^cap), saturating at cap.
inline int capped_valuation(const Integer& n, unsigned long p, int cap) {
  if (n == 0) return cap;
  return std::min(cap, static_cast<int>(*valuation(n, Integer(p))));
}

}  // namespace detail

/// Newton lift of an approximate root. Requires p^j | f(alpha), tau = v_p(f'(alpha))
/// and j >= 2*tau + 1; the returned beta is the unique root congruent to alpha
/// modulo p^(j - tau), reported to `precision` digits (default j - tau).
inline PadicInt hensel_lift(const IntPolynomial& f, const Integer& alpha, unsigned long p, int j,
                            int tau, std::optional<int> precision = std::nullopt) {
  const int target = precision.value_or(j - tau);
  if (target < 1) throw PreconditionError("hensel_lift: target precision must be positive");
  if (j < 1 || tau < 0) throw PreconditionError("hensel_lift: j must be >= 1 and tau >= 0");

  const int work = std::max(target + tau, j);
  const Integer pw = pow_ui(p, static_cast<unsigned long>(work));
  const Integer ptau = pow_ui(p, static_cast<unsigned long>(tau));
  const IntPolynomial df = f.derivative();

  Integer a = mod(alpha, pw);
  const int vt = detail::capped_valuation(df.eval_mod(a, pw), p, work);
  int e = detail::capped_valuation(f.eval_mod(a, pw), p, work);
  if (vt != tau || e < j || j < 2 * tau + 1) {
    throw HenselPreconditionError("hensel_lift: precondition violated (tau=" + std::to_string(vt) +
                                      ", v_p(f(alpha))=" + std::to_string(e) +
                                      ", j=" + std::to_string(j) +
                                      ", claimed tau=" + std::to_string(tau) + ")",
                                  vt, e);
  }

  // Slack e - 2*tau at least doubles per step; a is correct modulo p^(e - tau).
  const Integer unit_mod = pow_ui(p, static_cast<unsigned long>(work - tau));
  while (e - tau < target) {
    const Integer fa = f.eval_mod(a, pw);
    const Integer dfa = df.eval_mod(a, pw);
    const Integer delta = mod(Integer(fa / ptau) * inverse_mod(Integer(dfa / ptau), unit_mod),
                              unit_mod);
    a = mod(a - delta, pw);
    const int next = detail::capped_valuation(f.eval_mod(a, pw), p, work);
    if (next <= e) throw InvariantError("hensel_lift: Newton step made no progress");
    e = next;
  }
  return {p, target, a};
}

/// Square root of an even-valuation p-adic integer (odd p). `seed_mod_p` selects
/// the branch: it must square to the unit part of `a` modulo p. The result is
/// known to precision N - v/2.
inline PadicInt sqrt(const PadicInt& a, const Integer& seed_mod_p) {
  const unsigned long p = a.prime();
  if (p == 2) throw PreconditionError("sqrt: p = 2 is not supported");
  const Valuation v = a.valuation();
  if (v.is_infinite()) {
    const int n = a.precision();
    return PadicInt::zero(p, n - n / 2);
  }
  if (v.value % 2 != 0)
    throw PreconditionError("sqrt: odd valuation " + std::to_string(v.value));

  const PadicInt unit = v.value == 0 ? a : a.div_pow_p(v.value);
  const Integer u0 = mod_ui(unit.residue(), p);
  Integer legendre_arg = u0;
  if (mpz_legendre(legendre_arg.get_mpz_t(), Integer(p).get_mpz_t()) != 1)
    throw PreconditionError("sqrt: unit part is not a square mod " + std::to_string(p));
  if (mod(seed_mod_p * seed_mod_p - u0, Integer(p)) != 0)
    throw PreconditionError("sqrt: seed does not square to the unit part mod " +
                            std::to_string(p));

  const IntPolynomial f({-unit.residue(), Integer(0), Integer(1)});
  const PadicInt root = hensel_lift(f, mod(seed_mod_p, Integer(p)), p, 1, 0, unit.precision());
  return root.mul_pow_p(v.value / 2);
}

}  // namespace lcgl2
