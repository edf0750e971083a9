// Build a certificate for p = 5 with the library API and re-verify it from
// its serialized form.

#include <iostream>

#include "lcgl2/lcgl2.hpp"

int main() {
  lcgl2::SearchConfig cfg;
  cfg.seed = 1;
  const lcgl2::ConstructOutcome out = lcgl2::construct(5, cfg);
  if (!out.certificate) {
    std::cerr << "no solution within budget\n";
    return 2;
  }
  const lcgl2::Certificate& c = *out.certificate;
  std::cout << "y^2 = (x - " << c.a0 << ")(x - " << c.b0 << ")(x - " << c.c0 << ")\n";
  std::cout << "q1 = " << c.q1 << "\nq2 = " << c.q2 << "\nq3 = " << c.q3 << "\n";

  const lcgl2::Certificate reread = lcgl2::parse(lcgl2::emit(c));
  const lcgl2::CheckReport report = lcgl2::verify(reread);
  std::cout << lcgl2::format_report(report);
  return report.all_passed() ? 0 : 1;
}
