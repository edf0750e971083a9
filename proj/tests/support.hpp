#pragma once

#include <random>

#include "lcgl2/lcgl2.hpp"

namespace lcgl2::test_support {

/// The default p = 5 certificate, built once per test binary.
inline const Certificate& reference_certificate_p5() {
  static const Certificate cert = [] {
    SearchConfig cfg;
    cfg.seed = 1;
    ConstructOutcome out = construct(5, cfg);
    if (!out.certificate) throw InvariantError("reference construction for p = 5 failed");
    return *out.certificate;
  }();
  return cert;
}

inline Integer random_integer(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Integer(d(rng));
}

/// Uniform residue in [0, m).
inline Integer random_below(std::mt19937_64& rng, const Integer& m) {
  Integer out = 0;
  const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2) + 64;
  for (std::size_t done = 0; done < bits; done += 64) {
    out <<= 64;
    out += Integer(std::to_string(rng()));
  }
  return mod(out, m);
}

}  // namespace lcgl2::test_support
