#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace bohrlab {

using cplx = std::complex<double>;

// Raised when a quantity leaves the regime where the underlying bound makes
// sense (e.g. S_r/pi >= 1 in area_odds).
struct SingularInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TruncationPolicy {
  double abs_tol = 1e-12;
  int max_order = 100000;
};

// How to resolve a supremum over the circle |z| = r.
struct SupMode {
  enum Kind { ExactFamily, ThetaGrid } kind = ExactFamily;
  int grid_points = 720;
  static SupMode exact_family() { return {ExactFamily, 0}; }
  static SupMode theta_grid(int m = 720) { return {ThetaGrid, m}; }
};

// An analytic function on the unit disk given by exact coefficient access
// plus enough structure to sum its coefficient series with a rigorous
// truncation bound.  Instances are immutable after construction and safe to
// share across threads.
class DiskFunction {
 public:
  enum class Family { Moebius, HalfPlane, Koebe, Polynomial, Blaschke, Explicit, ScaledTail };

  // f_a(z) = (a - z)/(1 - a z), a in [0, 1).  Self-map of the disk; the
  // extremal witness for every functional in the catalog.
  static DiskFunction moebius(double a);
  // 1/(1 - z), all coefficients 1.
  static DiskFunction half_plane();
  // z/(1 - z)^2, coefficients n.
  static DiskFunction koebe();
  static DiskFunction polynomial(std::vector<cplx> coeffs, bool bounded_by_one = false);
  // Product of factors (z_j - z)/(1 - conj(z_j) z) times a unimodular rotation.
  static DiskFunction blaschke(std::vector<cplx> zeros, cplx rotation = cplx{1.0, 0.0});
  // Finite stored series; tail_scale * tail_ratio^n documents the coefficient
  // envelope of the (dropped) tail when the series came from a truncation.
  static DiskFunction explicit_series(std::vector<cplx> coeffs, double tail_ratio = 0.0,
                                      double tail_scale = 0.0, bool bounded_by_one = false);
  // factor * (inner - inner(0)): same coefficients as `inner` for n >= 1
  // scaled by `factor`, constant term zero.  Used for harmonic co-analytic
  // parts g with b_n = factor * a_n.
  static DiskFunction scaled_tail(DiskFunction inner, cplx factor);

  Family family() const { return family_; }
  bool bounded_by_one() const { return bounded_; }
  double moebius_a() const;

  cplx a0() const { return a0_; }
  // Exact coefficient of z^n (closed form per family; convolution of factor
  // series for Blaschke products).
  cplx coeff(int n) const;
  // Series value at z, |z| < 1; closed forms where the family admits one.
  cplx eval(cplx z) const;

  // sup_{|z|=r} |f(z)|.  Closed form for Moebius/HalfPlane/Koebe; otherwise
  // theta-grid plus golden-section refinement (a lower bound of the true sup
  // within grid resolution).
  double sup_modulus(double r) const;
  double sup_modulus(double r, const SupMode& mode) const;
  // sup_{|z|=r} |f(z) - a0|.
  double sup_dist_a0(double r) const;

  // sum_{n>=N} |a_n| r^n
  double majorant_tail(double r, int N, const TruncationPolicy& policy = {}) const;
  // sum_{n>=N} |a_n|^2 r^(2n)
  double quadratic_sum(double r, int N, const TruncationPolicy& policy = {}) const;
  // sum_{n>=1} n |a_n|^2 r^(2n)  ==  S_r / pi
  double area_ratio(double r, const TruncationPolicy& policy = {}) const;
  // x/(1-x) with x = area_ratio(r); throws SingularInputError when x >= 1.
  double area_odds(double r, const TruncationPolicy& policy = {}) const;
  // sum_{n>=N} |a_n|^2 r^n  (single power; Lemma-5.1-type sums)
  double coeff_square_sum(double r, int N = 1, const TruncationPolicy& policy = {}) const;

 private:
  DiskFunction() = default;

  double generic_sum(double x, int N, int coeff_power, int n_weight,
                     const TruncationPolicy& policy) const;
  int required_order(double x, int n_weight, double tol, int max_order) const;
  double grid_sup(double r, int m, bool subtract_a0) const;
  std::vector<cplx> blaschke_coeffs_to(int order) const;

  Family family_ = Family::Polynomial;
  double a_ = 0.0;                    // Moebius parameter
  std::vector<cplx> coeffs_;          // Polynomial / Explicit prefix
  std::vector<cplx> zeros_;           // Blaschke zeros
  cplx rotation_{1.0, 0.0};
  double tail_ratio_ = 0.0;
  double tail_scale_ = 0.0;
  bool bounded_ = false;
  cplx a0_{0.0, 0.0};
  std::shared_ptr<const DiskFunction> inner_;  // ScaledTail base
  cplx factor_{0.0, 0.0};
  // precomputed at construction; shared so copies stay cheap
  std::shared_ptr<const std::vector<cplx>> blaschke_prefix_;
};

void require_radius(double r);  // throws std::domain_error unless 0 <= r < 1

} // namespace bohrlab
