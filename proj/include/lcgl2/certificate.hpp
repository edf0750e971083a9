#pragma once

// Construction certificates: the numeric record of one curve
//   y^2 = (x - a0)(x - b0)(x - c0)
// plus a checker that re-derives every claim from those numbers alone.
// Stored check results and metadata never influence verify().

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcgl2/curve_model.hpp"
#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"
#include "lcgl2/padic.hpp"
#include "lcgl2/primality.hpp"
#include "lcgl2/target_builder.hpp"
#include "lcgl2/tate_series.hpp"
#include "lcgl2/version.hpp"

namespace lcgl2 {

inline constexpr int kCertificateFormatVersion = 1;
inline constexpr std::string_view kCertificateFormat = "lcgl2-certificate";

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string details;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  std::vector<std::string> failed_ids() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.id);
    return out;
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

struct CertificateMetadata {
  std::string tool = std::string(kToolName);
  std::string version = std::string(kVersion);
  std::uint64_t seed = 0;
  std::uint64_t d_range = 0;
  std::uint64_t x_window = 0;
  unsigned long sieve_bound = 0;

  friend bool operator==(const CertificateMetadata&, const CertificateMetadata&) = default;
};

struct Certificate {
  unsigned long p = 0;
  int r = 0;
  Integer s1, s2;
  Integer x0, y0;
  Integer q1, q2, q3;
  std::array<PrimalityEvidence, 3> evidence;
  Integer a0, b0, c0;
  std::array<Integer, 3> series_digest;  // xpp_i mod p^r
  std::vector<CheckResult> checks;       // derived; recomputed by verify()
  CertificateMetadata metadata;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifyOptions {
  unsigned long point_count_bound = 20000;
  PrimalityOptions primality{};
};

namespace detail {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string id, std::string name) : id_(std::move(id)), name_(std::move(name)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      failures_ << (failures_.tellp() > 0 ? "; " : "") << "FAILED " << what;
    }
  }
  void note(const std::string& what) { notes_ << (notes_.tellp() > 0 ? "; " : "") << what; }
  void fail(const std::string& what) { require(false, what); }

  CheckResult finish() const {
    std::string details = failures_.str();
    const std::string n = notes_.str();
    if (!n.empty()) details += (details.empty() ? "" : "; ") + n;
    return {id_, name_, passed_, details};
  }

 private:
  std::string id_, name_;
  bool passed_ = true;
  std::ostringstream failures_, notes_;
};

template <class F>
CheckResult run_check(const char* id, const char* name, F&& body) {
  CheckBuilder b(id, name);
  try {
    body(b);
  } catch (const std::exception& e) {
    b.fail(std::string("exception: ") + e.what());
  }
  return b.finish();
}

inline std::string s(const Integer& n) { return n.get_str(); }

}  // namespace detail

inline CheckReport verify(const Certificate& cert, const VerifyOptions& opt = {}) {
  using detail::CheckBuilder;
  using detail::run_check;
  using detail::s;

  const unsigned long p = cert.p;
  if (p < 5 || !is_small_prime(p))
    throw PreconditionError("certificate prime must be a prime >= 5 (got " + std::to_string(p) + ")");
  const int r = construction_precision(p);
  const Integer P(p);
  const Integer pr = pow_ui(p, static_cast<unsigned long>(r));
  const Integer pp = pow_ui(p, p);
  const Integer sixteen_pp = 16 * pp;

  CheckReport report;
  auto& out = report.checks;

  out.push_back(run_check("C1", "congruences", [&](CheckBuilder& b) {
    b.require(cert.r == r, "r = 4p+1 (certificate has " + std::to_string(cert.r) + ")");
    const CongruenceTarget t = build_targets(build_bundle(p));
    b.require(cert.s1 == t.s1, "s1 matches recomputed CRT target");
    b.require(cert.s2 == t.s2, "s2 matches recomputed CRT target");
    for (int i = 0; i < 3; ++i)
      b.require(cert.series_digest[static_cast<std::size_t>(i)] == t.xpp[static_cast<std::size_t>(i)],
                "series digest xpp" + std::to_string(i + 1) + " matches recomputation");
    b.require(mod(cert.a0, 64) == 0, "a0 = 0 mod 64");
    b.require(mod(cert.b0, 64) == 1, "b0 = 1 mod 64");
    b.require(mod(cert.c0, 64) == 17, "c0 = 17 mod 64");
    b.require(mod(cert.a0 - t.xpp[0], pr) == 0, "a0 = xpp1 mod p^r");
    b.require(mod(cert.b0 - t.xpp[1], pr) == 0, "b0 = xpp2 mod p^r");
    b.require(mod(cert.c0 - t.xpp[2], pr) == 0, "c0 = xpp3 mod p^r");
    b.note("modulus 64*" + std::to_string(p) + "^" + std::to_string(r));
  }));

  out.push_back(run_check("C2", "prime structure", [&](CheckBuilder& b) {
    b.require(cert.q1 == cert.b0 - cert.a0, "q1 = b0 - a0");
    b.require(cert.q2 == cert.c0 - cert.a0, "q2 = c0 - a0");
    b.require(cert.b0 - cert.c0 == sixteen_pp * cert.q3, "b0 - c0 = 16 p^p q3");
    const Integer modulus = 64 * pr;
    const Integer diff = cert.s1 - cert.s2;
    if (divides(sixteen_pp, diff)) {
      const Integer c3 = 4 * pow_ui(p, static_cast<unsigned long>(r) - p);
      b.require(cert.q1 == cert.s1 + modulus * cert.x0, "q1 = Q1(x0, y0)");
      b.require(cert.q2 == cert.s2 + modulus * cert.y0, "q2 = Q2(x0, y0)");
      b.require(cert.q3 == diff / sixteen_pp + c3 * (cert.x0 - cert.y0), "q3 = Q3(x0, y0)");
    } else {
      b.fail("16 p^p divides s1 - s2");
    }
    const std::array<const Integer*, 3> qs{&cert.q1, &cert.q2, &cert.q3};
    for (int i = 0; i < 3; ++i) {
      const Integer& q = *qs[static_cast<std::size_t>(i)];
      const std::string name = "q" + std::to_string(i + 1);
      const PrimalityEvidence ev = is_prime(q, opt.primality);
      b.require(ev.passes(), name + " passes is_prime (" + ev.method + ")");
      b.require(q != 2 && q != P, name + " not in {2, p}");
      if (ev.passes()) b.note(name + ": " + to_string(ev.verdict));
    }
    b.require(cert.q1 != cert.q2 && cert.q1 != cert.q3 && cert.q2 != cert.q3,
              "q1, q2, q3 pairwise distinct");
  }));

  out.push_back(run_check("C3", "residues mod p", [&](CheckBuilder& b) {
    b.require(mod(cert.q1, P) == 1, "q1 = 1 mod p");
    b.require(mod(cert.q2, P) == 1, "q2 = 1 mod p");
    b.require(mod(cert.q3, P) == 1, "q3 = 1 mod p");
  }));

  out.push_back(run_check("C4", "discriminant identity", [&](CheckBuilder& b) {
    const CurveModel e = CurveModel::split(cert.a0, cert.b0, cert.c0);
    const Integer expected = pow_ui(2, 12) * pow_ui(p, 2 * p) * cert.q1 * cert.q1 * cert.q2 *
                             cert.q2 * cert.q3 * cert.q3;
    b.require(e.discriminant() == Rational(expected), "Delta = 2^12 p^(2p) q1^2 q2^2 q3^2");
    b.note("Delta has " + std::to_string(mpz_sizeinbase(e.discriminant().get_num_mpz_t(), 10)) +
           " digits");
  }));

  out.push_back(run_check("C5", "reduced c4", [&](CheckBuilder& b) {
    const SplitInvariants si = split_delta_and_reduced_c4(cert.a0, cert.b0, cert.c0);
    b.require(si.c4_reduced == cert.q1 * cert.q1 - sixteen_pp * cert.q2 * cert.q3,
              "c4_reduced = q1^2 - 16 p^p q2 q3");
    b.require(gcd(si.c4_reduced, cert.q1 * cert.q2 * cert.q3) == 1, "gcd(c4_reduced, q1 q2 q3) = 1");
    b.require(mod(si.c4_reduced, pp) == 1, "c4_reduced = 1 mod p^p");
  }));

  out.push_back(run_check("C6", "good reduction at 2", [&](CheckBuilder& b) {
    const CurveModel m = two_model(cert.a0, cert.b0, cert.c0);
    const Rational& d = m.discriminant();
    b.require(d.get_den() == 1 && mpz_odd_p(d.get_num_mpz_t()), "two-adic model has odd discriminant");
    const ReductionType rt = reduction_type(m, 2);
    b.require(rt.kind == ReductionKind::good, std::string("reduction at 2 is good (got ") +
                                                  to_string(rt.kind) + ")");
  }));

  out.push_back(run_check("C7", "multiplicative at p", [&](CheckBuilder& b) {
    const CurveModel m = transform(CurveModel::split(cert.a0, cert.b0, cert.c0), kTateChange);
    b.require(m.integral_at(P), "transformed model integral at p");
    const ReductionType rt = reduction_type(m, P);
    b.require(rt.v_delta >= static_cast<long>(p), "v_p(Delta) >= p");
    b.require(rt.v_c4 && *rt.v_c4 == 0, "v_p(c4) = 0");
    b.require(rt.minimal && rt.kind == ReductionKind::multiplicative,
              std::string("minimal and multiplicative (got ") + to_string(rt.kind) + ")");
    b.note("v_p(Delta) = " + std::to_string(rt.v_delta));
  }));

  out.push_back(run_check("C8", "multiplicative at q1, q2, q3", [&](CheckBuilder& b) {
    const CurveModel e = CurveModel::split(cert.a0, cert.b0, cert.c0);
    const std::array<const Integer*, 3> qs{&cert.q1, &cert.q2, &cert.q3};
    for (int i = 0; i < 3; ++i) {
      const Integer& q = *qs[static_cast<std::size_t>(i)];
      const std::string name = "q" + std::to_string(i + 1);
      if (q < 3) {
        b.fail(name + " >= 3");
        continue;
      }
      const ReductionType rt = reduction_type(e, q);
      b.require(rt.v_delta == 2, name + ": v(Delta) = 2 (got " + std::to_string(rt.v_delta) + ")");
      b.require(rt.v_c4 && *rt.v_c4 == 0, name + ": v(c4) = 0");
      b.require(rt.kind == ReductionKind::multiplicative, name + ": multiplicative");
    }
  }));

  out.push_back(run_check("C9", "Tate parameter congruence at p", [&](CheckBuilder& b) {
    const int work = r + 2 * static_cast<int>(p);
    const SplitInvariants si = split_delta_and_reduced_c4(cert.a0, cert.b0, cert.c0);
    const Integer c4 = 16 * si.c4_reduced;
    if (divides(P, c4)) {
      b.fail("c4 of the curve is a p-adic unit");
      return;
    }
    const PadicInt inv_j_curve = PadicInt::from_rational(si.delta, c4 * c4 * c4, p, work);

    // y^2 + xy = x^3 + a4 x + a6: b2 = 1, b4 = 2 a4, b6 = 4 a6, b8 = a6 - a4^2.
    const TateInvariants ai = tate_a_invariants(p, work);
    const PadicInt b4 = ai.a4 * Integer(2);
    const PadicInt b6 = ai.a6 * Integer(4);
    const PadicInt b8 = ai.a6 - ai.a4 * ai.a4;
    const PadicInt c4q = PadicInt::one(p, work) - b4 * Integer(24);
    const PadicInt delta_q = -b8 - b4 * b4 * b4 * Integer(8) - b6 * b6 * Integer(27) +
                             b4 * b6 * Integer(9);
    const PadicInt cinv = c4q.inv();
    const PadicInt inv_j_tate = delta_q * cinv * cinv * cinv;

    const Valuation vd = (inv_j_curve - inv_j_tate).valuation();
    b.require(!vd.exact || vd.value >= r, "v_p(1/j_E - 1/j_Eq) >= 4p+1 (got " +
                                              std::string(vd.exact ? "" : ">=") +
                                              std::to_string(vd.value) + ")");
    b.note("v_p(1/j_E) = " + std::to_string(inv_j_curve.valuation().value) +
           ", v_p(1/j_Eq) = " + std::to_string(inv_j_tate.valuation().value) +
           ", v_p(difference) " + (vd.exact ? "= " : ">= ") + std::to_string(vd.value) +
           " at working precision " + std::to_string(work));
  }));

  out.push_back(run_check("C10", "Hensel root of x^(2p) - q0", [&](CheckBuilder& b) {
    const int e = static_cast<int>(p);
    const Integer q_tate = pow_ui(p, 2 * p);
    const Integer q0 = q_tate + pr;  // a representative of q_tate mod p^(4p+1)
    b.require(*valuation(Integer(q_tate - q0), P) >= static_cast<unsigned long>(r),
              "v_p(p^(2p) - q0) >= 4p+1");
    const IntPolynomial f = IntPolynomial::binomial(2 * p, q0);
    const Integer df = f.derivative()(P);
    const long tau = static_cast<long>(*valuation(df, P));
    b.require(tau == 2 * e, "tau = v_p(2p * p^(2p-1)) = 2p");
    b.require(r >= 2 * tau + 1, "j = 4p+1 >= 2 tau + 1");
    const int target = r;
    const PadicInt beta = hensel_lift(f, P, p, r, static_cast<int>(tau), target);
    b.require(mod(beta.residue() - P, pow_ui(p, 2 * p + 1)) == 0, "beta = p mod p^(2p+1)");
    const Integer residual = f.eval_mod(beta.residue(), pow_ui(p, static_cast<unsigned long>(target + tau)));
    b.require(residual == 0, "f(beta) = 0 mod p^(precision + tau)");
    b.note("beta = " + beta.expansion(target));
  }));

  out.push_back(run_check("C11", "torsion structure", [&](CheckBuilder& b) {
    b.require(cert.a0 != cert.b0 && cert.b0 != cert.c0 && cert.a0 != cert.c0,
              "roots a0, b0, c0 distinct (full rational 2-torsion)");
    const CurveModel e = CurveModel::split(cert.a0, cert.b0, cert.c0);
    const Integer disc = e.discriminant().get_num();
    bool found = false;
    for (unsigned long ell = 3; ell <= opt.point_count_bound && !found; ell += 2) {
      if (!is_small_prime(ell) || divides(Integer(ell), disc)) continue;
      const std::uint64_t n = count_points_mod_ell(e, ell, opt.point_count_bound);
      b.require(within_hasse_bound(n, ell), "Hasse bound at " + std::to_string(ell));
      b.require(n % 4 == 0, "#E(F_" + std::to_string(ell) + ") divisible by 4");
      if (n % p != 0) {
        found = true;
        b.note("#E(F_" + std::to_string(ell) + ") = " + std::to_string(n) + " not divisible by p");
      }
    }
    b.require(found, "a good prime ell <= " + std::to_string(opt.point_count_bound) +
                         " with #E(F_ell) != 0 mod p");
  }));

  // Which local rule applies where; its verdict is the conjunction of the
  // hypothesis checks it cites.
  {
    const auto ok = [&](std::string_view id) {
      const CheckResult* c = report.find(id);
      return c != nullptr && c->passed;
    };
    CheckBuilder b("C12", "local cyclicity ledger");
    b.require(ok("C8") && ok("C3"),
              "at q1, q2, q3: image trivial or cyclic of order p (multiplicative C8, q_i = 1 mod p C3)");
    b.require(ok("C9") && ok("C10"),
              "at p: cyclic of order p-1 (q0^(1/2) = +-beta^p, q0^(1/p) = zeta beta^2 in Z_p by C9, C10)");
    b.require(ok("C6"), "at 2: good reduction (C6), unramified");
    b.note("other primes: good reduction away from 2p q1 q2 q3 (C4), unramified");
    b.require(ok("C7") && ok("C8") && ok("C11"),
              "GL2(p) image: semistable (C6, C7, C8), full 2-torsion and no p-torsion evidence (C11), "
              "p >= 5; surjectivity cites Mazur's torsion theorem (not verified)");
    out.push_back(b.finish());
  }

  return report;
}

inline std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name;
    if (!c.details.empty()) os << " -- " << c.details;
    os << '\n';
  }
  os << (report.all_passed() ? "verdict: all checks passed" : "verdict: FAILED") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Serialization. Integers are decimal strings throughout.

inline std::string emit(const Certificate& c) {
  using json = nlohmann::ordered_json;
  json j;
  j["format"] = kCertificateFormat;
  j["format_version"] = kCertificateFormatVersion;
  j["p"] = std::to_string(c.p);
  j["r"] = std::to_string(c.r);
  j["targets"] = {{"s1", c.s1.get_str()}, {"s2", c.s2.get_str()}};
  j["point"] = {{"x0", c.x0.get_str()}, {"y0", c.y0.get_str()}};
  const std::array<const Integer*, 3> qs{&c.q1, &c.q2, &c.q3};
  json primes = json::object();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& ev = c.evidence[i];
    json w = json::array();
    for (auto x : ev.witnesses) w.push_back(std::to_string(x));
    primes["q" + std::to_string(i + 1)] = {{"value", qs[i]->get_str()},
                                           {"verdict", to_string(ev.verdict)},
                                           {"method", ev.method},
                                           {"witnesses", w}};
  }
  j["primes"] = primes;
  j["curve"] = {{"a0", c.a0.get_str()}, {"b0", c.b0.get_str()}, {"c0", c.c0.get_str()}};
  j["series_digest"] = {{"xpp1", c.series_digest[0].get_str()},
                        {"xpp2", c.series_digest[1].get_str()},
                        {"xpp3", c.series_digest[2].get_str()}};
  json checks = json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"id", ch.id}, {"name", ch.name}, {"passed", ch.passed}, {"details", ch.details}});
  j["checks"] = checks;
  j["metadata"] = {{"tool", c.metadata.tool},
                   {"version", c.metadata.version},
                   {"seed", std::to_string(c.metadata.seed)},
                   {"d_range", std::to_string(c.metadata.d_range)},
                   {"x_window", std::to_string(c.metadata.x_window)},
                   {"sieve_bound", std::to_string(c.metadata.sieve_bound)}};
  return j.dump(2) + "\n";
}

namespace detail {

using json = nlohmann::json;

inline const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::string field_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline Integer parse_integer(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  const std::string where = field_path(path, key);
  if (!v.is_string()) throw ParseError(where, "expected a decimal string");
  auto n = parse_decimal(v.get<std::string>());
  if (!n) throw ParseError(where, "malformed integer \"" + v.get<std::string>() + "\"");
  return *n;
}

template <class T>
T parse_bounded(const json& obj, const std::string& key, const std::string& path, T lo, T hi) {
  const Integer n = parse_integer(obj, key, path);
  if (n < Integer(std::to_string(lo)) || n > Integer(std::to_string(hi)))
    throw ParseError(field_path(path, key), "integer out of range");
  return static_cast<T>(std::stoull(n.get_str()));
}

inline std::string parse_string(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) throw ParseError(field_path(path, key), "expected a string");
  return v.get<std::string>();
}

}  // namespace detail

inline Certificate parse(std::string_view text) {
  using detail::json;
  using detail::parse_integer;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("", "certificate must be a JSON object");
  if (detail::parse_string(j, "format", "") != kCertificateFormat)
    throw ParseError("format", "unknown certificate format");
  const json& version = detail::member(j, "format_version", "");
  if (!version.is_number_integer() || version.get<long long>() != kCertificateFormatVersion)
    throw ParseError("format_version", "unsupported version " + version.dump());

  Certificate c;
  c.p = detail::parse_bounded<unsigned long>(j, "p", "", 2, 1'000'000);
  c.r = detail::parse_bounded<int>(j, "r", "", 1, 4'000'001);
  const json& targets = detail::member(j, "targets", "");
  c.s1 = parse_integer(targets, "s1", "targets");
  c.s2 = parse_integer(targets, "s2", "targets");
  const json& point = detail::member(j, "point", "");
  c.x0 = parse_integer(point, "x0", "point");
  c.y0 = parse_integer(point, "y0", "point");

  const json& primes = detail::member(j, "primes", "");
  std::array<Integer*, 3> qs{&c.q1, &c.q2, &c.q3};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string name = "q" + std::to_string(i + 1);
    const std::string path = "primes." + name;
    const json& q = detail::member(primes, name, "primes");
    *qs[i] = parse_integer(q, "value", path);
    PrimalityEvidence& ev = c.evidence[i];
    ev.n = *qs[i];
    ev.trivial = ev.n < 2;
    const auto verdict = parse_verdict(detail::parse_string(q, "verdict", path));
    if (!verdict) throw ParseError(path + ".verdict", "unknown verdict");
    ev.verdict = *verdict;
    ev.method = detail::parse_string(q, "method", path);
    const json& w = detail::member(q, "witnesses", path);
    if (!w.is_array()) throw ParseError(path + ".witnesses", "expected an array");
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::string wp = path + ".witnesses[" + std::to_string(k) + "]";
      if (!w[k].is_string()) throw ParseError(wp, "expected a decimal string");
      auto n = parse_decimal(w[k].get<std::string>());
      if (!n || *n < 0 || !n->fits_ulong_p()) throw ParseError(wp, "malformed or out-of-range witness");
      ev.witnesses.push_back(n->get_ui());
    }
  }

  const json& curve = detail::member(j, "curve", "");
  c.a0 = parse_integer(curve, "a0", "curve");
  c.b0 = parse_integer(curve, "b0", "curve");
  c.c0 = parse_integer(curve, "c0", "curve");
  const json& digest = detail::member(j, "series_digest", "");
  for (std::size_t i = 0; i < 3; ++i)
    c.series_digest[i] = parse_integer(digest, "xpp" + std::to_string(i + 1), "series_digest");

  if (auto it = j.find("checks"); it != j.end()) {
    if (!it->is_array()) throw ParseError("checks", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& ch = (*it)[k];
      const std::string path = "checks[" + std::to_string(k) + "]";
      CheckResult cr;
      cr.id = detail::parse_string(ch, "id", path);
      cr.name = detail::parse_string(ch, "name", path);
      const json& passed = detail::member(ch, "passed", path);
      if (!passed.is_boolean()) throw ParseError(path + ".passed", "expected a boolean");
      cr.passed = passed.get<bool>();
      cr.details = detail::parse_string(ch, "details", path);
      c.checks.push_back(std::move(cr));
    }
  }

  if (auto it = j.find("metadata"); it != j.end()) {
    const json& m = *it;
    c.metadata.tool = detail::parse_string(m, "tool", "metadata");
    c.metadata.version = detail::parse_string(m, "version", "metadata");
    constexpr auto u64max = std::numeric_limits<std::uint64_t>::max();
    c.metadata.seed = detail::parse_bounded<std::uint64_t>(m, "seed", "metadata", 0, u64max);
    c.metadata.d_range = detail::parse_bounded<std::uint64_t>(m, "d_range", "metadata", 0, u64max);
    c.metadata.x_window = detail::parse_bounded<std::uint64_t>(m, "x_window", "metadata", 0, u64max);
    c.metadata.sieve_bound =
        detail::parse_bounded<unsigned long>(m, "sieve_bound", "metadata", 0, 1UL << 40);
  }
  return c;
}

}  // namespace lcgl2
