#pragma once

// Bounded search for (X, Y) with Q1, Q2, Q3 simultaneously prime.
//
// The candidate stream is indexed by k: block k fixes d = X - Y = d_min + perm(k)
// (perm is a seeded Fisher-Yates shuffle of [0, d_range)), tests Q3(d), and
// when it is prime sieves X in [max(0, d), max(0, d) + x_window) against small
// primes for Q1(X) and Q2(X - d) before running is_prime on survivors in
// ascending X. The answer is the first hit in stream order, so it does not
// depend on how blocks are spread over workers.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "lcgl2/errors.hpp"
#include "lcgl2/integer.hpp"
#include "lcgl2/primality.hpp"
#include "lcgl2/target_builder.hpp"

namespace lcgl2 {

struct SearchConfig {
  std::uint64_t seed = 1;
  std::uint64_t d_range = 1 << 16;
  std::uint64_t x_window = 1 << 13;
  unsigned long sieve_bound = 1 << 15;
  std::uint64_t budget = 2'000'000;  // primality tests
  unsigned workers = 1;
  PrimalityOptions primality{};
};

struct SearchStats {
  std::uint64_t blocks = 0;  // d values examined
  std::uint64_t q3_primes = 0;
  std::uint64_t candidates_sieved = 0;
  std::uint64_t sieve_survivors = 0;
  std::uint64_t tests = 0;
  double elapsed_seconds = 0;
};

struct SearchSolution {
  Integer x0, y0;
  std::uint64_t stream_index = 0;
  std::array<PrimalityEvidence, 3> evidence;  // for Q1, Q2, Q3
};

enum class SearchStop { found, budget_exhausted, range_exhausted };

struct SearchResult {
  SearchStop stop = SearchStop::budget_exhausted;
  std::optional<SearchSolution> solution;
  SearchStats stats;
};

/// Survivor flags for constant + coefficient * (start + i), i in [0, width):
/// 0 when some prime in `primes` properly divides the value. coefficient > 0.
inline std::vector<char> sieve_window(const Integer& constant, const Integer& coefficient,
                                      const Integer& start, std::size_t width,
                                      std::span<const unsigned long> primes) {
  if (coefficient <= 0) throw PreconditionError("sieve_window: coefficient must be positive");
  std::vector<char> alive(width, 1);
  if (width == 0) return alive;
  const Integer first = constant + coefficient * start;
  for (unsigned long ell : primes) {
    const unsigned long c = mod_ui(first, ell);
    const unsigned long a = mod_ui(coefficient, ell);
    if (a == 0) {
      if (c == 0) std::fill(alive.begin(), alive.end(), 0);
      continue;
    }
    // first + a*i = 0 (mod ell)
    const unsigned long ainv = mod_ui(inverse_mod(Integer(a), Integer(ell)), ell);
    const unsigned long i0 = static_cast<unsigned long>(
        (static_cast<unsigned __int128>(ell - c) % ell) * ainv % ell);
    for (std::size_t i = i0; i < width; i += ell) alive[i] = 0;
  }
  // Values that are themselves one of the sieving primes (or below 2) are left
  // for is_prime; the sequence is increasing so only a prefix can be affected.
  if (!primes.empty()) {
    const Integer top(primes.back());
    Integer v = first;
    for (std::size_t i = 0; i < width && v <= top; ++i, v += coefficient) alive[i] = 1;
  }
  return alive;
}

namespace detail {

struct BlockOutcome {
  std::uint64_t tests = 0;
  std::uint64_t sieved = 0;
  std::uint64_t survivors = 0;
  bool q3_prime = false;
  std::optional<SearchSolution> hit;
};

inline void check_form_pattern(const LinearFormTriple& f) {
  const bool ok = f.q1.cy == 0 && f.q1.cx > 0 && f.q2.cx == 0 && f.q2.cy == f.q1.cx &&
                  f.q3.cx > 0 && f.q3.cy == -f.q3.cx;
  if (!ok)
    throw PreconditionError("search: forms must be Q1(X), Q2(Y) with equal slopes and Q3(X - Y)");
}

inline std::vector<std::uint64_t> seeded_permutation(std::uint64_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> perm(n);
  for (std::uint64_t i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = n; i > 1; --i) {
    const std::uint64_t j = rng() % i;
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace detail

inline SearchResult search(const LinearFormTriple& forms, const CongruenceTarget& target,
                           const SearchConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  detail::check_form_pattern(forms);
  if (config.x_window == 0 || config.d_range == 0 || config.sieve_bound < 2)
    throw PreconditionError("search: window, d range and sieve bound must be positive");

  SearchResult result;
  if (config.budget == 0) {
    result.stop = SearchStop::budget_exhausted;
    return result;
  }

  const Integer slope = forms.q1.cx;
  const Integer q3_slope = forms.q3.cx;
  const Integer P(target.p);
  // Smallest d with Q3(d) >= 2.
  Integer d_min;
  const Integer need = 2 - forms.q3.constant;
  mpz_cdiv_q(d_min.get_mpz_t(), need.get_mpz_t(), q3_slope.get_mpz_t());

  const std::vector<unsigned long> sieve_primes = detail::primes_through(config.sieve_bound);
  const std::vector<std::uint64_t> perm = detail::seeded_permutation(config.d_range, config.seed);
  const auto width = static_cast<std::size_t>(config.x_window);

  const auto process = [&](std::uint64_t k) {
    detail::BlockOutcome out;
    const Integer d = d_min + Integer(static_cast<unsigned long>(perm[k]));
    const Integer q3 = forms.q3.constant + q3_slope * d;
    if (out.tests >= config.budget) return out;
    ++out.tests;
    PrimalityEvidence ev3 = is_prime(q3, config.primality);
    if (!ev3.passes() || q3 == 2 || q3 == P) return out;
    out.q3_prime = true;

    const Integer x_lo = d > 0 ? d : Integer(0);
    const Integer c2 = forms.q2.constant - slope * d;  // Q2(X - d) as a function of X
    std::vector<char> alive = sieve_window(forms.q1.constant, slope, x_lo, width, sieve_primes);
    const std::vector<char> alive2 = sieve_window(c2, slope, x_lo, width, sieve_primes);
    out.sieved = width;
    for (std::size_t i = 0; i < width; ++i) {
      alive[i] = alive[i] && alive2[i];
      out.survivors += alive[i] ? 1 : 0;
    }

    for (std::size_t i = 0; i < width; ++i) {
      if (!alive[i]) continue;
      if (out.tests >= config.budget) return out;
      const Integer x = x_lo + Integer(static_cast<unsigned long>(i));
      const Integer q1 = forms.q1.constant + slope * x;
      ++out.tests;
      PrimalityEvidence ev1 = is_prime(q1, config.primality);
      if (!ev1.passes()) continue;
      if (out.tests >= config.budget) return out;
      const Integer q2 = c2 + slope * x;
      ++out.tests;
      PrimalityEvidence ev2 = is_prime(q2, config.primality);
      if (!ev2.passes()) continue;
      const bool distinct = q1 != q2 && q1 != q3 && q2 != q3;
      const bool avoid = q1 != 2 && q2 != 2 && q1 != P && q2 != P;
      if (!distinct || !avoid) continue;
      out.hit = SearchSolution{x, x - d, k, {std::move(ev1), std::move(ev2), ev3}};
      return out;
    }
    return out;
  };

  const std::uint64_t n_blocks = config.d_range;
  std::vector<std::optional<detail::BlockOutcome>> outcomes(n_blocks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best_hit{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> total_tests{0};

  const auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= n_blocks || k > best_hit.load() || total_tests.load() >= config.budget) return;
      detail::BlockOutcome out = process(k);
      total_tests += out.tests;
      if (out.hit) {
        std::uint64_t cur = best_hit.load();
        while (k < cur && !best_hit.compare_exchange_weak(cur, k)) {
        }
      }
      outcomes[k] = std::move(out);
    }
  };

  const unsigned n_workers = std::max(1u, config.workers);
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }

  // Ordered reduction over the processed prefix.
  result.stop = SearchStop::range_exhausted;
  std::uint64_t cumulative = 0;
  for (std::uint64_t k = 0; k < n_blocks; ++k) {
    if (!outcomes[k]) {
      result.stop = SearchStop::budget_exhausted;
      break;
    }
    const auto& o = *outcomes[k];
    cumulative += o.tests;
    if (cumulative > config.budget) {
      result.stop = SearchStop::budget_exhausted;
      break;
    }
    ++result.stats.blocks;
    result.stats.q3_primes += o.q3_prime ? 1 : 0;
    result.stats.candidates_sieved += o.sieved;
    result.stats.sieve_survivors += o.survivors;
    result.stats.tests = cumulative;
    if (o.hit) {
      result.stop = SearchStop::found;
      result.solution = o.hit;
      break;
    }
    if (cumulative == config.budget) {
      result.stop = SearchStop::budget_exhausted;
      break;
    }
  }
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace lcgl2
