#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrlab/functionals.hpp"

namespace bohrlab::verify {

struct GridSpec {
  int a_points = 400;            // a in [0, a_max]
  int r_points = 400;            // r in [0, stated radius]
  std::vector<double> k_values;  // harmonic rows; defaults to {0, .25, .5, .75, 1}
  double tolerance = 1e-9;       // pass iff worst_margin <= tolerance
  double a_max = 1.0 - 1e-4;
};

struct FamilySpec {
  enum class Kind { Moebius, Blaschke, HarmonicExtremal } kind = Kind::Moebius;
  int samples = 1000;    // Blaschke: number of sampled products
  int max_degree = 5;    // Blaschke: degree bound
  std::uint64_t seed = 42;
  static FamilySpec moebius() { return {}; }
  static FamilySpec blaschke(int samples = 1000, int max_degree = 5, std::uint64_t seed = 42) {
    return {Kind::Blaschke, samples, max_degree, seed};
  }
  static FamilySpec harmonic_extremal() { return {Kind::HarmonicExtremal, 0, 0, 42}; }
};

std::string to_string(FamilySpec::Kind kind);

// How grid points are scanned.  threads == 1 is the plain serial loop kept
// as the reference implementation; threads > 1 runs the OpenMP kernel.  The
// reduction is a deterministic argmax (ties broken towards the smaller flat
// index), so both paths produce identical reports.
struct ExecPolicy {
  int threads = 1;
  static ExecPolicy serial() { return {1}; }
  static ExecPolicy parallel(int threads = 0);  // 0: hardware default / BOHRLAB_THREADS
  static ExecPolicy from_env();                 // BOHRLAB_THREADS, default parallel
};

struct Argmax {
  double a = 0.0, r = 0.0, k = 0.0, theta = 0.0;
};

struct VerificationReport {
  std::string functional;
  std::string family;
  int a_points = 0;
  int r_points = 0;
  std::vector<double> k_values;
  double tolerance = 0.0;
  double worst_margin = 0.0;  // max over grid of lhs - rhs
  Argmax argmax;
  bool pass = false;
  std::string radius_provenance;
  long long points = 0;
  long long flagged = 0;      // per-point singular inputs recorded and skipped
  double runtime_seconds = 0; // not serialized (reports must be byte-identical)
};

// Evaluate lhs - rhs over the grid; deterministic given the seed.
VerificationReport verify_grid(const functionals::FunctionalSpec& spec, const FamilySpec& family,
                               const GridSpec& grid, const ExecPolicy& exec = ExecPolicy::serial());

// Residual of the boundary-equality identity certifying sharpness of a
// lambda row, evaluated at the published constants (root and lambda as
// printed) and at the recomputed ones. Ids: a1, a2, a3, area-sq, area-sq-f2,
// refined-sq, refined-sq-f2.
struct BoundaryResidual {
  std::string id;
  double residual;             // at the published constants
  double residual_recomputed;  // at the converged constants
};
BoundaryResidual boundary_equality(std::string_view id);

struct Perturbation {
  enum class Kind { LambdaScale, RadiusExcess, AToOne } kind;
  double amount = 0.0;  // scale > 1 for LambdaScale; excess > 0 for RadiusExcess
  static Perturbation lambda_scale(double s) { return {Kind::LambdaScale, s}; }
  static Perturbation radius_excess(double e) { return {Kind::RadiusExcess, e}; }
  static Perturbation a_to_one() { return {Kind::AToOne, 0.0}; }
};

struct ProbeResult {
  bool violated = false;
  double a = 0.0, r = 0.0, k = 0.0;
  double margin = 0.0;  // lhs - rhs at the witness
};

// Search the witness family strictly outside the theorem's regime.  A
// margin > 1e-8 counts as a violation.
ProbeResult sharpness_probe(const functionals::FunctionalSpec& spec, const Perturbation& pert);

enum class Lemma { L32, L34, L35, L51 };
std::string to_string(Lemma lemma);
Lemma lemma_from_string(std::string_view s);

// Worst envelope margin of the lemma over the family and r-grid.  For L51
// with a Blaschke family the pairs are h = sampled product, b_n = (k/2) a_n
// (strict slack) plus the termwise-equality extremal pairs.
VerificationReport envelope_suite(Lemma lemma, const FamilySpec& family, const GridSpec& grid,
                                  const ExecPolicy& exec = ExecPolicy::serial());
// Largest deviation |lhs - rhs| of the L32 envelope over Moebius functions,
// which the lemma attains with equality (expected 0 within 1e-10).
double l32_moebius_equality_deviation(const GridSpec& grid);

struct BranchMaxResult {
  double t_star = 0.0;
  double value = 0.0;           // our evaluation of the branch maximum
  double printed_value = 0.0;   // the published figure for the same maximum
};
// Maximize the small-|a0| branch bound of the A1 proof over t in [0, 1/5].
BranchMaxResult branch_maximize_a1_star();

} // namespace bohrlab::verify
