// lcgl2: construct, verify and inspect certified curves with locally cyclic
// GL2(p) division fields.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lcgl2/lcgl2.hpp"

namespace {

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kBudgetExhausted = 2,
  kInternalError = 3,
  kUsage = 64,
  kDataError = 65,
};

int g_verbosity = 0;

// One JSON object per line on stderr.
void log_line(const std::string& event, nlohmann::ordered_json fields = nlohmann::ordered_json::object()) {
  if (g_verbosity < 0) return;
  nlohmann::ordered_json j;
  j["event"] = event;
  for (auto& [k, v] : fields.items()) j[k] = v;
  std::cerr << j.dump() << '\n';
}

void error_line(const std::string& message) {
  std::cerr << "lcgl2: error: " << message << '\n';
}

unsigned default_workers() {
  if (const char* env = std::getenv("LCGL2_WORKERS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0 && n <= 1024) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    error_line(std::string("ignoring invalid LCGL2_WORKERS=") + env);
  }
  return 1;
}

bool check_prime_argument(long long p, const char* command) {
  if (p == 2 || p == 3) {
    error_line(std::string(command) + ": p = " + std::to_string(p) +
               " is outside scope; the construction requires a prime p >= 5");
    return false;
  }
  if (p < 5 || p > 100000 || !lcgl2::is_small_prime(static_cast<std::uint64_t>(p))) {
    error_line(std::string(command) + ": --prime must be a prime >= 5 (got " + std::to_string(p) + ")");
    return false;
  }
  return true;
}

struct ConstructArgs {
  long long p = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = lcgl2::SearchConfig{}.budget;
  std::uint64_t d_range = lcgl2::SearchConfig{}.d_range;
  std::uint64_t x_window = lcgl2::SearchConfig{}.x_window;
  unsigned long sieve_bound = lcgl2::SearchConfig{}.sieve_bound;
  unsigned workers = 0;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  if (!check_prime_argument(a.p, "construct")) return kUsage;
  lcgl2::SearchConfig cfg;
  cfg.seed = a.seed;
  cfg.budget = a.budget;
  cfg.d_range = a.d_range;
  cfg.x_window = a.x_window;
  cfg.sieve_bound = a.sieve_bound;
  cfg.workers = a.workers > 0 ? a.workers : default_workers();
  const auto p = static_cast<unsigned long>(a.p);
  log_line("construct.start", {{"p", p}, {"seed", cfg.seed}, {"budget", cfg.budget}, {"workers", cfg.workers}});

  lcgl2::ConstructOutcome outcome;
  try {
    outcome = lcgl2::construct(p, cfg);
  } catch (const lcgl2::PreconditionError& e) {
    error_line(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_line(std::string("internal invariant failure: ") + e.what());
    return kInternalError;
  }

  const auto& st = outcome.search.stats;
  nlohmann::ordered_json stats{{"blocks", st.blocks},
                               {"q3_primes", st.q3_primes},
                               {"candidates_sieved", st.candidates_sieved},
                               {"sieve_survivors", st.sieve_survivors},
                               {"tests", st.tests},
                               {"elapsed_seconds", st.elapsed_seconds}};
  log_line("search.done", stats);

  if (!outcome.certificate) {
    const bool budget = outcome.search.stop == lcgl2::SearchStop::budget_exhausted;
    error_line(budget ? "search budget exhausted without a solution (raise --budget)"
                      : "search range exhausted without a solution (raise --d-range or --x-window)");
    std::cerr << "statistics: " << stats.dump() << '\n';
    return kBudgetExhausted;
  }

  const std::string text = lcgl2::emit(*outcome.certificate);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f || !(f << text)) {
      error_line("cannot write " + a.out);
      return kInternalError;
    }
  }
  std::cerr << lcgl2::format_report(outcome.report);
  if (!outcome.report.all_passed()) {
    error_line("constructed certificate failed verification");
    return kInternalError;
  }
  log_line("construct.done", {{"q1_bits", mpz_sizeinbase(outcome.certificate->q1.get_mpz_t(), 2)}});
  return kOk;
}

int run_verify(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    error_line("cannot read " + path);
    return kDataError;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  lcgl2::Certificate cert;
  try {
    cert = lcgl2::parse(buf.str());
  } catch (const lcgl2::ParseError& e) {
    error_line(std::string("parse error: ") + e.what());
    return kDataError;
  }
  lcgl2::CheckReport report;
  try {
    report = lcgl2::verify(cert);
  } catch (const lcgl2::PreconditionError& e) {
    error_line(std::string("malformed certificate: ") + e.what());
    return kDataError;
  }
  std::cout << lcgl2::format_report(report);
  return report.all_passed() ? kOk : kCheckFailed;
}

int run_series(long long p_arg, int digits, int precision) {
  if (!check_prime_argument(p_arg, "series")) return kUsage;
  const auto p = static_cast<unsigned long>(p_arg);
  const int r = lcgl2::construction_precision(p);
  if (digits <= 0) digits = r;
  const int prec = std::max({precision, r, digits + static_cast<int>(p)});
  const lcgl2::TateBundle b = lcgl2::build_bundle(p, prec);
  const auto line = [&](const char* name, const lcgl2::PadicInt& x) {
    std::cout << name << " = " << x.expansion(std::min(digits, x.precision())) << '\n';
  };
  std::cout << "p = " << p << ", q = " << p << "^" << 2 * p << ", precision " << prec << "\n";
  line("a4", b.a4);
  line("a6", b.a6);
  line("x''1", b.xpp1);
  line("x''2", b.xpp2);
  line("x''3", b.xpp3);
  line("alpha", b.alpha);
  line("beta", b.beta);
  line("gamma", b.gamma);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified elliptic curves with locally cyclic GL2(p) division fields"};
  app.set_version_flag("--version", std::string(lcgl2::kVersion));
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", g_verbosity, "More log output");
  app.add_flag_callback("-q,--quiet", [] { g_verbosity = -1; }, "Suppress structured log lines");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Search for a curve and write its certificate");
  construct->add_option("--prime,-p", ca.p, "Prime p >= 5")->required();
  construct->add_option("--seed", ca.seed, "Search seed")->capture_default_str();
  construct->add_option("--budget", ca.budget, "Maximum number of primality tests")->capture_default_str();
  construct->add_option("--d-range", ca.d_range, "Number of X - Y offsets to scan")->capture_default_str();
  construct->add_option("--x-window", ca.x_window, "X values per offset")->capture_default_str();
  construct->add_option("--sieve-bound", ca.sieve_bound, "Small-prime sieve bound")->capture_default_str();
  construct->add_option("--workers,-j", ca.workers, "Worker threads (default: LCGL2_WORKERS or 1)");
  construct->add_option("--out,-o", ca.out, "Certificate path (default: stdout)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate (C1-C12)");
  verify->add_option("file", verify_path, "Certificate JSON")->required();

  long long series_p = 0;
  int digits = 0;
  int precision = 0;
  auto* series = app.add_subcommand("series", "Print p-adic expansions of the Tate curve data");
  series->add_option("--prime,-p", series_p, "Prime p >= 5")->required();
  series->add_option("--digits,-k", digits, "Digits to print (default 4p+1)");
  series->add_option("--precision", precision, "Working precision override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*construct) return run_construct(ca);
  if (*verify) return run_verify(verify_path);
  if (*series) return run_series(series_p, digits, precision);
  return kUsage;
}
