#include "bohrlab/harmonic_pair.hpp"

#include <cmath>
#include <stdexcept>

namespace bohrlab {

HarmonicPair HarmonicPair::extremal(double a, double k, cplx lam) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("extremal: k must be in [0, 1]");
  if (std::fabs(std::abs(lam) - 1.0) > 1e-12)
    throw std::domain_error("extremal: lam must be unimodular");
  DiskFunction h = DiskFunction::moebius(a);
  DiskFunction g = DiskFunction::scaled_tail(h, k * lam);
  return HarmonicPair(std::move(h), std::move(g), k);
}

HarmonicPair HarmonicPair::subordinate(DiskFunction psi, double k, cplx lam) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("subordinate: k must be in [0, 1]");
  if (std::fabs(std::abs(lam) - 1.0) > 1e-12)
    throw std::domain_error("subordinate: lam must be unimodular");
  DiskFunction g = DiskFunction::scaled_tail(psi, k * lam);
  HarmonicPair pair(psi, std::move(g), k);
  pair.psi_ = std::move(psi);
  return pair;
}

HarmonicPair HarmonicPair::user(DiskFunction h, DiskFunction g, double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("user pair: k must be in [0, 1]");
  if (std::abs(g.a0()) != 0.0) throw std::domain_error("user pair: g must have no constant term");
  HarmonicPair pair(std::move(h), std::move(g), k);
  for (int i = 1; i <= 9; ++i) {
    if (pair.lemma51_margin(0.1 * i) < -1e-12)
      throw std::domain_error("user pair: coefficient inequality sum|b_n|^2 r^n <= k^2 sum|a_n|^2 r^n fails");
  }
  return pair;
}

double HarmonicPair::co_majorant(double r, int N, const TruncationPolicy& policy) const {
  if (N < 1) throw std::domain_error("co_majorant: N must be >= 1");
  return h_.majorant_tail(r, N, policy) + g_.majorant_tail(r, N, policy);
}

double HarmonicPair::lemma51_margin(double r, const TruncationPolicy& policy) const {
  return k_ * k_ * h_.coeff_square_sum(r, 1, policy) - g_.coeff_square_sum(r, 1, policy);
}

} // namespace bohrlab
