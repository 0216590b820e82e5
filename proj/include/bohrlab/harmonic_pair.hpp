#pragma once

#include <optional>

#include "bohrlab/disk_function.hpp"

namespace bohrlab {

// A sense-preserving harmonic map f = h + conj(g) with dilatation bound
// |g'| <= k |h'|, k = (K-1)/(K+1).  g carries no constant term.  Immutable.
class HarmonicPair {
 public:
  // h = moebius(a), b_n = k * lam * a_n for n >= 1 (|lam| = 1).  The
  // sharpness witness of the harmonic theorems; satisfies the dilatation
  // bound termwise with equality.
  static HarmonicPair extremal(double a, double k, cplx lam = cplx{1.0, 0.0});
  // h = psi, b_n = k * lam * a_n(psi): the boundary pair of the
  // subordination theorems.  Records psi so the bound side |psi(0)| +
  // dist(psi(0), boundary) can be formed later.
  static HarmonicPair subordinate(DiskFunction psi, double k, cplx lam = cplx{1.0, 0.0});
  // Arbitrary (h, g, k).  g must have no constant term; the Lemma-5.1
  // coefficient inequality is checked on an r-grid and rejected if violated.
  static HarmonicPair user(DiskFunction h, DiskFunction g, double k);

  const DiskFunction& h() const { return h_; }
  const DiskFunction& g() const { return g_; }
  double k() const { return k_; }
  const std::optional<DiskFunction>& psi() const { return psi_; }

  // sum_{n>=N} (|a_n| + |b_n|) r^n, N >= 1
  double co_majorant(double r, int N = 1, const TruncationPolicy& policy = {}) const;
  // k^2 sum_{n>=1} |a_n|^2 r^n  -  sum_{n>=1} |b_n|^2 r^n   (>= 0 for valid pairs)
  double lemma51_margin(double r, const TruncationPolicy& policy = {}) const;

 private:
  HarmonicPair(DiskFunction h, DiskFunction g, double k) : h_(std::move(h)), g_(std::move(g)), k_(k) {}

  DiskFunction h_;
  DiskFunction g_;
  double k_ = 0.0;
  std::optional<DiskFunction> psi_;
};

} // namespace bohrlab
