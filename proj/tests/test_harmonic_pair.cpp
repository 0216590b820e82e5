#include <doctest.h>

#include <cmath>
#include <complex>

#include "bohrlab/harmonic_pair.hpp"

using namespace bohrlab;

TEST_CASE("extremal pair with k=0 has a vanishing co-analytic part") {
  HarmonicPair p = HarmonicPair::extremal(0.5, 0.0);
  CHECK(std::abs(p.g().coeff(1)) == 0.0);
  CHECK(p.co_majorant(0.4, 1) == doctest::Approx(p.h().majorant_tail(0.4, 1)).epsilon(1e-15));
}

TEST_CASE("extremal pair coefficients b_n = k lam a_n") {
  HarmonicPair p = HarmonicPair::extremal(0.5, 1.0);
  CHECK(std::abs(p.g().coeff(1) - cplx{-0.75}) < 1e-15);
  HarmonicPair q = HarmonicPair::extremal(0.3, 0.6, std::polar(1.0, 0.7));
  for (int n : {1, 2, 5})
    CHECK(std::abs(std::abs(q.g().coeff(n)) - 0.6 * std::abs(q.h().coeff(n))) < 1e-15);
}

TEST_CASE("co_majorant closed form (1+k)(1-a^2) r/(1-ar) on the extremal family") {
  HarmonicPair p = HarmonicPair::extremal(0.5, 1.0);
  CHECK(p.co_majorant(1.0 / 3.0, 1) == doctest::Approx(0.6).epsilon(1e-13));
  for (double a : {0.2, 0.7})
    for (double k : {0.0, 0.25, 1.0})
      for (double r : {0.1, 0.5, 0.8}) {
        HarmonicPair q = HarmonicPair::extremal(a, k);
        double expect = (1 + k) * (1 - a * a) * r / (1 - a * r);
        CHECK(q.co_majorant(r, 1) == doctest::Approx(expect).epsilon(1e-13));
      }
}

TEST_CASE("lemma-5.1 margin vanishes exactly on the extremal family") {
  for (double a : {0.0, 0.4, 0.9})
    for (double k : {0.0, 0.5, 1.0}) {
      HarmonicPair p = HarmonicPair::extremal(a, k, std::polar(1.0, 1.3));
      for (int i = 1; i <= 9; ++i) CHECK(p.lemma51_margin(0.1 * i) == 0.0);
    }
}

TEST_CASE("halved co-analytic part leaves strict slack") {
  DiskFunction h = DiskFunction::moebius(0.5);
  double k = 0.8;
  HarmonicPair p = HarmonicPair::user(h, DiskFunction::scaled_tail(h, 0.5 * k), k);
  CHECK(p.lemma51_margin(0.5) > 0.0);
}

TEST_CASE("user pairs are validated") {
  DiskFunction h = DiskFunction::moebius(0.5);
  // constant term in g
  CHECK_THROWS_AS(HarmonicPair::user(h, DiskFunction::polynomial({cplx{0.1}, cplx{0.1}}), 0.5),
                  std::domain_error);
  // coefficient inequality violated: |b_1| = 1 > k |a_1|
  CHECK_THROWS_AS(HarmonicPair::user(h, DiskFunction::polynomial({cplx{0.0}, cplx{1.0}}), 0.1),
                  std::domain_error);
  // valid pair passes
  HarmonicPair ok = HarmonicPair::user(h, DiskFunction::polynomial({cplx{0.0}, cplx{0.05}}), 0.5);
  CHECK(ok.k() == 0.5);
}

TEST_CASE("co_majorant is monotone in r and in k on the extremal family") {
  for (double a : {0.2, 0.6}) {
    double prev = -1.0;
    for (int i = 0; i <= 9; ++i) {
      double v = HarmonicPair::extremal(a, 0.5).co_majorant(0.1 * i, 1);
      CHECK(v >= prev);
      prev = v;
    }
    prev = -1.0;
    for (double k : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double v = HarmonicPair::extremal(a, k).co_majorant(0.5, 1);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(HarmonicPair::extremal(0.5, 1.5), std::domain_error);
  CHECK_THROWS_AS(HarmonicPair::extremal(0.5, 0.5, cplx{0.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(HarmonicPair::extremal(0.5, 0.5).co_majorant(0.5, 0), std::domain_error);
}
