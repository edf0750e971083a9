#pragma once

// End-to-end pipeline: series -> targets -> forms -> prime search -> curve ->
// self-verified certificate.

#include <optional>

#include "lcgl2/certificate.hpp"
#include "lcgl2/errors.hpp"
#include "lcgl2/prime_search.hpp"
#include "lcgl2/target_builder.hpp"
#include "lcgl2/tate_series.hpp"

namespace lcgl2 {

struct ConstructOutcome {
  std::optional<Certificate> certificate;  // set only when the search found a point
  CheckReport report;                      // verify() on that certificate
  SearchResult search;
  CongruenceTarget target;
};

inline ConstructOutcome construct(unsigned long p, const SearchConfig& config,
                                  const VerifyOptions& verify_options = {}) {
  detail::require_prime(p, 5, "construct");
  const TateBundle bundle = build_bundle(p);
  ConstructOutcome out;
  out.target = build_targets(bundle);
  const LinearFormTriple forms = linear_forms(out.target);
  if (!pairwise_independent(forms) || !admissible(forms, p))
    throw InvariantError("construct: linear forms are degenerate");

  out.search = search(forms, out.target, config);
  if (!out.search.solution) return out;
  const SearchSolution& sol = *out.search.solution;
  const CurveTriple curve = assemble_curve(out.target, sol.x0, sol.y0);

  Certificate c;
  c.p = p;
  c.r = out.target.r;
  c.s1 = out.target.s1;
  c.s2 = out.target.s2;
  c.x0 = sol.x0;
  c.y0 = sol.y0;
  c.q1 = curve.q1;
  c.q2 = curve.q2;
  c.q3 = curve.q3;
  c.evidence = sol.evidence;
  c.a0 = curve.a0;
  c.b0 = curve.b0;
  c.c0 = curve.c0;
  c.series_digest = out.target.xpp;
  c.metadata.seed = config.seed;
  c.metadata.d_range = config.d_range;
  c.metadata.x_window = config.x_window;
  c.metadata.sieve_bound = config.sieve_bound;

  out.report = verify(c, verify_options);
  c.checks = out.report.checks;
  out.certificate = std::move(c);
  return out;
}

}  // namespace lcgl2
