#include "bohrlab/rootfind.hpp"

#include <cmath>

namespace bohrlab {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double tol, int max_iterations) {
  if (!(lo < hi)) throw BracketError("find_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, lo, lo};
  if (fhi == 0.0) return {hi, 0.0, 0, hi, hi};
  if (std::signbit(flo) == std::signbit(fhi))
    throw BracketError("find_root: no sign change on bracket");

  int iter = 0;
  bool force_bisect = false;
  while (hi - lo > tol) {
    if (++iter > max_iterations)
      throw ConvergenceError("find_root: iteration limit reached");
    double width = hi - lo;
    double mid = 0.5 * (lo + hi);
    // secant candidate; bisection whenever it leaves the bracket or the
    // previous step failed to halve the bracket (guards one-sided stalls)
    double denom = fhi - flo;
    if (!force_bisect && denom != 0.0) {
      double sec = lo - flo * (hi - lo) / denom;
      if (sec > lo + 0.01 * width && sec < hi - 0.01 * width) mid = sec;
    }
    double fmid = f(mid);
    if (fmid == 0.0) { lo = hi = mid; break; }
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid; flo = fmid;
    } else {
      hi = mid; fhi = fmid;
    }
    force_bisect = (hi - lo) > 0.5 * width;
  }
  double value = 0.5 * (lo + hi);
  return {value, std::fabs(f(value)), iter, lo, hi};
}

int sign_changes(const std::function<double(double)>& f, double lo, double hi, int points) {
  int changes = 0;
  double prev = f(lo);
  for (int i = 1; i <= points; ++i) {
    double t = lo + (hi - lo) * static_cast<double>(i) / points;
    double cur = f(t);
    if (prev != 0.0 && cur != 0.0 && std::signbit(prev) != std::signbit(cur)) ++changes;
    if (cur != 0.0) prev = cur;
  }
  return changes;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int max_iterations) {
  constexpr double invphi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < max_iterations && (b - a) > xtol; ++i) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a); f2 = f(x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a); f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

} // namespace bohrlab
