#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bohrlab/disk_function.hpp"
#include "bohrlab/harmonic_pair.hpp"

namespace bohrlab::functionals {

// One row per theorem: a left-hand-side expression, a bound, and a stated
// admissible radius.
enum class Id {
  Classical,     // sum |a_n| r^n <= 1,                       r <= 1/3
  RogosinskiN,   // |f(z)| + tail_N <= 1,                     r <= R_N
  RogosinskiSqN, // |f(z)|^2 + tail_N <= 1,                   r <= R'_N
  Area169,       // majorant + (16/9) S_r/pi <= 1,            r <= 1/3
  Area98,        // |a0|^2 + tail_1 + (9/8) S_r/pi <= 1,      r <= 1/2
  AreaSq,        // majorant + (16/9) x + lam x^2, x=S_r/pi,  r <= 1/3
  AreaSqF2,      // |f|^2 + tail_1 + (16/9) x + lam x^2,      r <= 1/3
  Odds169,       // majorant + (16/9) X, X=S_r/(pi-S_r),      r <= 1/3
  Odds98,        // |a0|^2 + tail_1 + (9/8) X,                r <= 1/2
  Refined,       // majorant + refined term + (8/9) x,        r <= 1/3
  RefinedDist,   // majorant + refined term + |f - a0|,       r <= 1/5
  RefinedSq,     // refined + (8/9) x + lam x^2,              r <= 1/3
  RefinedSqF2,   // |a0|^2 variant + (9/8) x + lam x^2,       r <= 1/(3-|a0|)
  A1,            // refined + |f - a0| + (18/5) x + lam x^2,  r <= 1/5
  A2,            // refined + (8/9) X + lam X^2,              r <= 1/3
  A3,            // |a0|^2 variant + (9/8) X + lam X^2,       r <= 1/(3-|a0|)
  HarmI1,        // |h| + co-majorant <= ||h||_inf,           r <= r1(k)
  HarmI2,        // |h|^2 + co-majorant <= ||h||_inf,         r <= r2(k)
  HarmJ,         // |h| + co-majorant <= 1 (Re h <= 1),       r <= (K+1)/(7K+3)
  SubConvex,     // |h| + co-majorant <= |psi(0)| + dist,     r <= (K+1)/(7K+3)
  SubUniv,       // same bound,                               r <= r_u(k)
};

struct ZPolicy {
  enum Kind { SupCircle, FixedAngle } kind = SupCircle;
  double theta = 0.0;
  static ZPolicy sup_circle() { return {}; }
  static ZPolicy fixed_angle(double theta) { return {FixedAngle, theta}; }
};

struct FunctionalSpec {
  Id id;
  std::optional<double> lambda;  // lambda rows only; defaults to the catalog value
  std::optional<int> N;          // Rogosinski rows
  std::optional<double> k;       // harmonic rows
  ZPolicy z_policy;
};

FunctionalSpec make_spec(Id id);

// Stable string ids used by the CLI and report schema ("a1", "odds-9-8", ...).
std::string to_string(Id id);
Id id_from_string(std::string_view s);  // throws std::invalid_argument

bool is_harmonic_row(Id id);
bool has_lambda(Id id);
double catalog_lambda(Id id);  // the sharp constant (fully converged)

// LHS of the row at radius r; |f(z)|-type terms resolved by spec.z_policy.
// Throws std::invalid_argument when the subject kind does not match the row;
// propagates SingularInputError from area_odds.
double lhs(const FunctionalSpec& spec, const DiskFunction& f, double r);
double lhs(const FunctionalSpec& spec, const HarmonicPair& pair, double r);

// RHS of the row: 1 for the analytic rows and HarmJ; ||h||_inf for HarmI1/I2
// (exact 1 for Moebius h, theta-grid at r = 1-1e-6 otherwise); |psi(0)| +
// dist(psi(0), boundary of psi(D)) for the subordination rows.
double rhs(const FunctionalSpec& spec, const DiskFunction& f);
double rhs(const FunctionalSpec& spec, const HarmonicPair& pair);

// The theorem's admissible radius.  RefinedSqF2 and A3 depend on |a0|.
double stated_radius(const FunctionalSpec& spec, double a0_mod = 0.0);
// "closed-form" or "certified-root"
std::string radius_provenance(Id id);

// dist(psi(0), boundary of psi(D)): exact for the catalog maps (1/2 for
// 1/(1-z), 1/4 for the Koebe function, 1-a for a Moebius self-map), boundary
// theta-grid minimum otherwise.
double boundary_distance(const DiskFunction& psi);

enum class SubordinationKind { Convex, Univalent };
// Coefficient envelope |a_n| <= 2 dist (convex) or 4 n dist (univalent).
double coefficient_envelope_subordination(SubordinationKind kind, int n, double dist);

} // namespace bohrlab::functionals
