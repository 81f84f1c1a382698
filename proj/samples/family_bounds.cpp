// Prints the best bound for a few polynomial families and checks each one
// against the brute-force factorization over F_3.

#include <iostream>
#include <string>
#include <vector>

#include "polybound/polybound.hpp"

using namespace polybound;

int main() {
  const std::vector<std::string> vars{"x", "y"};
  const FieldDescriptor q = FieldDescriptor::rationals();
  for (const std::string text : {"(2 + x + y)*(3 + x + y)", "(1 + x*y + y^2)^3", "1 + x^4 + x^3*y + y^2",
                                 "x + x^2*y + y^2", "1 + x*y + y^5"}) {
    const auto report = analyze(parse_poly<Rational>(text, q, vars), vars);
    std::cout << report.input << "\n  best bound: "
              << (report.best_bound ? std::to_string(*report.best_bound) : std::string("none")) << '\n';
  }

  const FieldDescriptor f3 = FieldDescriptor::prime(3);
  const auto f = parse_bipoly<PrimeFieldElem>("(1 + x*y + y^2)^2", f3, vars);
  const auto fac = oracle_factor_fp(f);
  std::cout << "over F3, " << format_poly(f) << " has " << fac.count() << " irreducible factors:\n";
  for (const auto& [g, m] : fac.factors) std::cout << "  " << format_poly(g) << "  ^" << m << '\n';
}
