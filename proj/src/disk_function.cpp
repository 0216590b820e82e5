#include "bohrlab/disk_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohrlab/rootfind.hpp"

namespace bohrlab {

namespace {

// Coefficients of a Blaschke product precomputed at construction.  Covers
// every radius up to 0.95 at the default 1e-12 tolerance under the |a_n|<=1
// envelope; larger radii extend on demand.
constexpr int kBlaschkePrefix = 704;

// sum_{n>=N} x^n
double geom_tail(double x, int N) {
  return std::pow(x, N) / (1.0 - x);
}
// sum_{n>=N} n x^n, N >= 1
double geom_tail_n(double x, int N) {
  return std::pow(x, N) * (N - (N - 1) * x) / ((1.0 - x) * (1.0 - x));
}
// sum_{n>=N} n^2 x^n, N >= 1
double geom_tail_n2(double x, int N) {
  double c0 = static_cast<double>(N) * N;
  double c1 = 2.0 * N * N - 2.0 * N - 1.0;
  double c2 = static_cast<double>(N - 1) * (N - 1);
  double d = 1.0 - x;
  return std::pow(x, N) * (c0 - c1 * x + c2 * x * x) / (d * d * d);
}
// sum_{n>=1} n^3 x^n
double geom_sum_n3(double x) {
  double d = 1.0 - x;
  return x * (1.0 + 4.0 * x + x * x) / (d * d * d * d);
}

} // namespace

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must satisfy 0 <= r < 1");
}

DiskFunction DiskFunction::moebius(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("moebius: a must be in [0, 1)");
  DiskFunction f;
  f.family_ = Family::Moebius;
  f.a_ = a;
  f.a0_ = a;
  f.bounded_ = true;
  return f;
}

DiskFunction DiskFunction::half_plane() {
  DiskFunction f;
  f.family_ = Family::HalfPlane;
  f.a0_ = 1.0;
  return f;
}

DiskFunction DiskFunction::koebe() {
  DiskFunction f;
  f.family_ = Family::Koebe;
  f.a0_ = 0.0;
  return f;
}

DiskFunction DiskFunction::polynomial(std::vector<cplx> coeffs, bool bounded_by_one) {
  DiskFunction f;
  f.family_ = Family::Polynomial;
  f.coeffs_ = std::move(coeffs);
  if (f.coeffs_.empty()) f.coeffs_.push_back(0.0);
  f.a0_ = f.coeffs_[0];
  f.bounded_ = bounded_by_one;
  return f;
}

DiskFunction DiskFunction::blaschke(std::vector<cplx> zeros, cplx rotation) {
  for (const cplx& z : zeros)
    if (!(std::abs(z) < 1.0)) throw std::domain_error("blaschke: zeros must lie inside the disk");
  if (std::fabs(std::abs(rotation) - 1.0) > 1e-12)
    throw std::domain_error("blaschke: rotation must be unimodular");
  DiskFunction f;
  f.family_ = Family::Blaschke;
  f.zeros_ = std::move(zeros);
  f.rotation_ = rotation;
  f.bounded_ = true;
  f.blaschke_prefix_ = std::make_shared<const std::vector<cplx>>(f.blaschke_coeffs_to(kBlaschkePrefix));
  f.a0_ = f.blaschke_prefix_->front();
  return f;
}

DiskFunction DiskFunction::explicit_series(std::vector<cplx> coeffs, double tail_ratio,
                                           double tail_scale, bool bounded_by_one) {
  if (!(tail_ratio >= 0.0 && tail_ratio < 1.0) || tail_scale < 0.0)
    throw std::domain_error("explicit_series: need tail_ratio in [0,1) and tail_scale >= 0");
  DiskFunction f;
  f.family_ = Family::Explicit;
  f.coeffs_ = std::move(coeffs);
  if (f.coeffs_.empty()) f.coeffs_.push_back(0.0);
  f.tail_ratio_ = tail_ratio;
  f.tail_scale_ = tail_scale;
  f.a0_ = f.coeffs_[0];
  f.bounded_ = bounded_by_one;
  return f;
}

DiskFunction DiskFunction::scaled_tail(DiskFunction inner, cplx factor) {
  DiskFunction f;
  f.family_ = Family::ScaledTail;
  f.inner_ = std::make_shared<const DiskFunction>(std::move(inner));
  f.factor_ = factor;
  f.a0_ = 0.0;
  return f;
}

double DiskFunction::moebius_a() const {
  if (family_ != Family::Moebius) throw std::logic_error("moebius_a: wrong family");
  return a_;
}

cplx DiskFunction::coeff(int n) const {
  if (n < 0) throw std::domain_error("coeff: n must be >= 0");
  switch (family_) {
    case Family::Moebius:
      if (n == 0) return a_;
      return -(1.0 - a_ * a_) * std::pow(a_, n - 1);
    case Family::HalfPlane:
      return 1.0;
    case Family::Koebe:
      return static_cast<double>(n);
    case Family::Polynomial:
    case Family::Explicit:
      return n < static_cast<int>(coeffs_.size()) ? coeffs_[n] : cplx{0.0, 0.0};
    case Family::Blaschke:
      if (n < static_cast<int>(blaschke_prefix_->size())) return (*blaschke_prefix_)[n];
      return blaschke_coeffs_to(n)[n];
    case Family::ScaledTail:
      return n == 0 ? cplx{0.0, 0.0} : factor_ * inner_->coeff(n);
  }
  return {};
}

cplx DiskFunction::eval(cplx z) const {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("eval: |z| must be < 1");
  switch (family_) {
    case Family::Moebius:
      return (a_ - z) / (1.0 - a_ * z);
    case Family::HalfPlane:
      return 1.0 / (1.0 - z);
    case Family::Koebe:
      return z / ((1.0 - z) * (1.0 - z));
    case Family::Polynomial:
    case Family::Explicit: {
      cplx acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    case Family::Blaschke: {
      cplx acc = rotation_;
      for (const cplx& w : zeros_) acc *= (w - z) / (1.0 - std::conj(w) * z);
      return acc;
    }
    case Family::ScaledTail:
      return factor_ * (inner_->eval(z) - inner_->a0());
  }
  return {};
}

std::vector<cplx> DiskFunction::blaschke_coeffs_to(int order) const {
  // Per factor (w - z)/(1 - conj(w) z): multiply the running series by
  // (w - z), then divide by (1 - conj(w) z) via the recurrence
  // c_n = b_n + conj(w) c_{n-1}.  Coefficients up to `order` are exact.
  std::vector<cplx> acc(order + 1, cplx{0.0, 0.0});
  acc[0] = rotation_;
  for (const cplx& w : zeros_) {
    const cplx wc = std::conj(w);
    cplx prev = acc[0];
    acc[0] = w * acc[0];
    for (int n = 1; n <= order; ++n) {
      cplx cur = acc[n];
      acc[n] = w * cur - prev + wc * acc[n - 1];
      prev = cur;
    }
  }
  return acc;
}

int DiskFunction::required_order(double x, int n_weight, double tol, int max_order) const {
  // Smallest M with the bounded-coefficient envelope tail below tol:
  //   n_weight 0: sum_{n>M} x^n;   n_weight 1: sum_{n>M} n x^n.
  if (x == 0.0) return 1;
  int m = std::max(1, static_cast<int>(std::log(tol * (1.0 - x)) / std::log(x)) - 2);
  while (m < max_order) {
    double bound = n_weight == 0 ? geom_tail(x, m + 1) : geom_tail_n(x, m + 1);
    if (bound < tol) return m;
    ++m;
  }
  throw ConvergenceError("series truncation order exceeds max_order");
}

// sum_{n>=N} |a_n|^coeff_power * n^n_weight * x^n over the stored series,
// truncated where the |a_n| <= 1 envelope tail drops below policy.abs_tol.
double DiskFunction::generic_sum(double x, int N, int coeff_power, int n_weight,
                                 const TruncationPolicy& policy) const {
  int last;
  switch (family_) {
    case Family::Polynomial:
    case Family::Explicit:
      last = static_cast<int>(coeffs_.size()) - 1;
      break;
    case Family::Blaschke:
      last = x == 0.0 ? N : required_order(x, n_weight, policy.abs_tol, policy.max_order);
      break;
    default:
      throw std::logic_error("generic_sum: family has closed forms");
  }
  const std::vector<cplx>* prefix = nullptr;
  std::vector<cplx> extended;
  if (family_ == Family::Blaschke) {
    if (last < static_cast<int>(blaschke_prefix_->size())) {
      prefix = blaschke_prefix_.get();
    } else {
      extended = blaschke_coeffs_to(last);
      prefix = &extended;
    }
  } else {
    prefix = &coeffs_;
  }
  double sum = 0.0;
  double xn = std::pow(x, N);
  for (int n = N; n <= last; ++n) {
    double mod = std::abs((*prefix)[n]);
    double term = coeff_power == 2 ? mod * mod : mod;
    if (n_weight == 1) term *= n;
    sum += term * xn;
    xn *= x;
  }
  return sum;
}

double DiskFunction::majorant_tail(double r, int N, const TruncationPolicy& policy) const {
  require_radius(r);
  if (N < 0) throw std::domain_error("majorant_tail: N must be >= 0");
  switch (family_) {
    case Family::Moebius: {
      double head = N == 0 ? a_ : 0.0;
      int n0 = std::max(N, 1);
      return head + (1.0 - a_ * a_) * std::pow(a_, n0 - 1) * std::pow(r, n0) / (1.0 - a_ * r);
    }
    case Family::HalfPlane:
      return geom_tail(r, N);
    case Family::Koebe:
      return r == 0.0 ? 0.0 : geom_tail_n(r, std::max(N, 1));
    case Family::ScaledTail:
      return std::abs(factor_) * inner_->majorant_tail(r, std::max(N, 1), policy);
    default:
      return generic_sum(r, N, 1, 0, policy);
  }
}


double DiskFunction::quadratic_sum(double r, int N, const TruncationPolicy& policy) const {
  require_radius(r);
  if (N < 0) throw std::domain_error("quadratic_sum: N must be >= 0");
  switch (family_) {
    case Family::Moebius: {
      double head = N == 0 ? a_ * a_ : 0.0;
      int n0 = std::max(N, 1);
      double c = 1.0 - a_ * a_;
      return head + c * c * std::pow(a_ * a_, n0 - 1) * std::pow(r, 2 * n0) / (1.0 - a_ * a_ * r * r);
    }
    case Family::HalfPlane:
      return geom_tail(r * r, N);
    case Family::Koebe:
      return r == 0.0 ? 0.0 : geom_tail_n2(r * r, std::max(N, 1));
    case Family::ScaledTail:
      return std::norm(factor_) * inner_->quadratic_sum(r, std::max(N, 1), policy);
    default:
      return generic_sum(r * r, N, 2, 0, policy);
  }
}

double DiskFunction::area_ratio(double r, const TruncationPolicy& policy) const {
  require_radius(r);
  switch (family_) {
    case Family::Moebius: {
      double c = 1.0 - a_ * a_;
      double d = 1.0 - a_ * a_ * r * r;
      return c * c * r * r / (d * d);
    }
    case Family::HalfPlane: {
      double d = 1.0 - r * r;
      return r * r / (d * d);
    }
    case Family::Koebe:
      return geom_sum_n3(r * r);
    case Family::ScaledTail:
      return std::norm(factor_) * inner_->area_ratio(r, policy);
    default:
      return generic_sum(r * r, 1, 2, 1, policy);
  }
}

double DiskFunction::area_odds(double r, const TruncationPolicy& policy) const {
  double x = area_ratio(r, policy);
  if (x >= 1.0) throw SingularInputError("area_odds: S_r >= pi");
  return x / (1.0 - x);
}

double DiskFunction::coeff_square_sum(double r, int N, const TruncationPolicy& policy) const {
  require_radius(r);
  if (N < 1) throw std::domain_error("coeff_square_sum: N must be >= 1");
  switch (family_) {
    case Family::Moebius: {
      double c = 1.0 - a_ * a_;
      return c * c * std::pow(a_ * a_, N - 1) * std::pow(r, N) / (1.0 - a_ * a_ * r);
    }
    case Family::HalfPlane:
      return geom_tail(r, N);
    case Family::Koebe:
      return r == 0.0 ? 0.0 : geom_tail_n2(r, N);
    case Family::ScaledTail:
      return std::norm(factor_) * inner_->coeff_square_sum(r, N, policy);
    default:
      return generic_sum(r, N, 2, 0, policy);
  }
}

double DiskFunction::grid_sup(double r, int m, bool subtract_a0) const {
  const cplx base = subtract_a0 ? a0_ : cplx{0.0, 0.0};
  auto value = [&](double theta) {
    cplx z = std::polar(r, theta);
    return std::abs(eval(z) - base);
  };
  const double step = 2.0 * std::numbers::pi / m;
  std::vector<double> vals(m);
  for (int i = 0; i < m; ++i) vals[i] = value(i * step);
  double best = 0.0;
  // refine around every discrete local maximum
  for (int i = 0; i < m; ++i) {
    double prev = vals[(i + m - 1) % m], cur = vals[i], next = vals[(i + 1) % m];
    best = std::max(best, cur);
    if (cur >= prev && cur >= next) {
      double theta = golden_max(value, i * step - step, i * step + step, 1e-12);
      best = std::max(best, value(theta));
    }
  }
  return best;
}

double DiskFunction::sup_modulus(double r) const { return sup_modulus(r, SupMode{}); }

double DiskFunction::sup_modulus(double r, const SupMode& mode) const {
  require_radius(r);
  if (mode.kind == SupMode::ExactFamily) {
    switch (family_) {
      case Family::Moebius:
        return (a_ + r) / (1.0 + a_ * r);   // attained at z = -r
      case Family::HalfPlane:
        return 1.0 / (1.0 - r);             // attained at z = r
      case Family::Koebe:
        return r / ((1.0 - r) * (1.0 - r)); // attained at z = r
      case Family::ScaledTail:
        return std::abs(factor_) * inner_->sup_dist_a0(r);
      default:
        break;  // no closed form; fall through to the grid
    }
  }
  int m = mode.kind == SupMode::ThetaGrid ? mode.grid_points : 720;
  return grid_sup(r, m, false);
}

double DiskFunction::sup_dist_a0(double r) const {
  require_radius(r);
  switch (family_) {
    case Family::Moebius:
      return (1.0 - a_ * a_) * r / (1.0 - a_ * r);  // attained at z = r
    case Family::HalfPlane:
      return r / (1.0 - r);
    case Family::Koebe:
      return r / ((1.0 - r) * (1.0 - r));
    case Family::ScaledTail:
      return std::abs(factor_) * inner_->sup_dist_a0(r);
    default:
      return grid_sup(r, 720, true);
  }
}

} // namespace bohrlab
