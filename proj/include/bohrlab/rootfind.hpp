#pragma once

#include <functional>
#include <stdexcept>

namespace bohrlab {

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootResult {
  double value = 0.0;
  double residual = 0.0;   // |f(value)|
  int iterations = 0;
  double bracket_lo = 0.0; // final bracket, width <= tol
  double bracket_hi = 0.0;
};

// Bracketed root of a continuous f with f(lo)*f(hi) < 0.  Bisection with a
// secant step whenever the secant iterate stays inside the current bracket,
// so convergence is guaranteed and usually superlinear.  `tol` bounds the
// final bracket width.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-13, int max_iterations = 200);

// Number of sign changes of f on [lo, hi] sampled at `points` equispaced
// nodes.  Used to certify root uniqueness before calling find_root.
int sign_changes(const std::function<double(double)>& f, double lo, double hi,
                 int points = 10000);

// Golden-section maximizer of a unimodal-enough smooth f on [lo, hi].
// Returns the abscissa of the maximum located to within `xtol`.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-12, int max_iterations = 200);

} // namespace bohrlab
