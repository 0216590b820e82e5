#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/rootfind.hpp"

namespace bohrlab::constants {

// Dense polynomial with ascending coefficients, evaluated by Horner.
struct Polynomial {
  std::vector<double> c;
  double operator()(double t) const;
};

struct ConstantEntry {
  std::string id;
  enum class Kind { Root, FormulaAtRoot, ClosedForm } kind;
  std::string defining;        // human-readable defining equation / formula
  double bracket_lo = 0.0;     // pole-free bracket for Root entries
  double bracket_hi = 0.0;
  double printed;              // the published reference value
  int printed_decimals;        // decimals carried by the published value
  std::string source;          // anchor of the statement the value comes from
};

struct Reproduction {
  std::string id;
  double value;      // recomputed from the defining equation / formula
  double printed;
  double delta;      // |value - printed|
  bool pass;         // delta within the comparison tolerance
  double tolerance;
  double converged;  // formula at the fully converged root (Root entries: == value)
};

const std::vector<ConstantEntry>& catalog();
const ConstantEntry& entry(std::string_view id);  // throws std::invalid_argument on unknown id

// Recompute one catalog value from its defining equation.  Root entries are
// solved to a 1e-13 bracket.  Formula entries are evaluated at the defining
// root rounded to the root's published precision (that is how the published
// lambda digits were produced; the pole factors 3-5t etc. amplify the sixth
// decimal of the root by ~1e-3); `converged` carries the full-precision
// evaluation.
Reproduction reproduce(std::string_view id);
std::vector<Reproduction> reproduce_all();

// Converged roots and lambda values (cached; computed once per process).
double alpha();
double beta();
double gamma();
double root_18();
double root_16();
double root_147();
double root_139();
double lambda_a1();
double lambda_a2();
double lambda_a3();
double lambda_18();
double lambda_16();
double lambda_147();
double lambda_139();

// Lambda formulas as functions of the root (closed forms).
double lambda_a1_formula(double a);
double lambda_a2_formula(double a);
double lambda_a3_formula(double a);
double lambda_18_formula(double a);
double lambda_16_formula(double a);
double lambda_147_formula(double a);
// Defined by the boundary equality of its theorem at r = 1/(3-a); the
// published quotient formula is inconsistent with the published value and
// root (it evaluates negative on the whole root bracket).
double lambda_139_formula(double a);

// Theorem radii.
double rogosinski_radius(int N);     // root of 2(1+r) r^N - (1-r)^2
double rogosinski_sq_radius(int N);  // root of (1+r) r^N - (1-r)^2
double r1(double k);                 // root of 2(k+1) r (1+r) - (1-r)^2
double r2(double k);                 // root of (k+1) r (1+r) - (1-r)^2
double r_u(double k);                // root of 8r + 4k r sqrt(1+r) - (1-r)^2
double harm_j_radius(double K);      // (K+1)/(7K+3); K = inf -> 1/7
double harm_51_radius(double K);     // (K+1)/(5K+1); K = inf -> 1/5

struct RadiusParams {
  std::optional<int> N;
  std::optional<double> k;
  std::optional<double> K;
  std::optional<double> a0;
};
// Generic entry point used by the CLI: ids rogosinski, rogosinski_sq, r1,
// r2, r_u, harm_j, harm_51, inv_3_minus_a0.
double radius(std::string_view id, const RadiusParams& params);

} // namespace bohrlab::constants
