#include "bohrlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bohrlab/constants.hpp"
#include "bohrlab/rootfind.hpp"

#ifdef BOHRLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace bohrlab::verify {

namespace {

constexpr double kViolationThreshold = 1e-8;  // separates violations from roundoff
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int env_threads() {
  if (const char* s = std::getenv("BOHRLAB_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
#ifdef BOHRLAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Deterministic argmax accumulator: larger margin wins, ties go to the
// smaller flat index, so the merged result is independent of scan order.
struct ScanBest {
  double margin = -std::numeric_limits<double>::infinity();
  long long idx = -1;
  long long flagged = 0;

  void consider(double m, long long i) {
    if (std::isnan(m)) {
      ++flagged;
      return;
    }
    if (m > margin || (m == margin && (idx < 0 || i < idx))) {
      margin = m;
      idx = i;
    }
  }
  void merge(const ScanBest& other) {
    flagged += other.flagged;
    if (other.idx < 0) return;
    if (other.margin > margin || (other.margin == margin && (idx < 0 || other.idx < idx))) {
      margin = other.margin;
      idx = other.idx;
    }
  }
};

// margin_at(i) -> lhs - rhs at flat index i, NaN for flagged points.
template <class F>
ScanBest scan_points(long long count, const ExecPolicy& exec, const F& margin_at) {
  ScanBest best;
  if (exec.threads <= 1) {
    for (long long i = 0; i < count; ++i) best.consider(margin_at(i), i);
    return best;
  }
#ifdef BOHRLAB_HAVE_OPENMP
  const int nt = exec.threads;
  std::vector<ScanBest> partial(nt);
#pragma omp parallel num_threads(nt)
  {
    ScanBest local;
#pragma omp for schedule(static) nowait
    for (long long i = 0; i < count; ++i) local.consider(margin_at(i), i);
    partial[omp_get_thread_num()].merge(local);
  }
  for (const ScanBest& p : partial) best.merge(p);
#else
  for (long long i = 0; i < count; ++i) best.consider(margin_at(i), i);
#endif
  return best;
}

double grid_value(double maxval, int idx, int points) {
  return points <= 1 ? maxval : maxval * idx / (points - 1);
}

std::vector<double> default_k(const GridSpec& grid) {
  if (!grid.k_values.empty()) return grid.k_values;
  return {0.0, 0.25, 0.5, 0.75, 1.0};
}

// Seeded Blaschke sample: degrees 1..max_degree, zeros area-uniform in
// |z| <= 0.9, unimodular rotation.  Uniforms are drawn from the raw
// mt19937_64 stream so the sample is identical on every platform.
std::vector<DiskFunction> sample_blaschke(const FamilySpec& family) {
  std::mt19937_64 rng(family.seed);
  auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
  std::vector<DiskFunction> out;
  out.reserve(family.samples);
  for (int s = 0; s < family.samples; ++s) {
    int degree = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(family.max_degree));
    std::vector<cplx> zeros(degree);
    for (cplx& z : zeros)
      z = std::polar(0.9 * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform());
    cplx rotation = std::polar(1.0, 2.0 * std::numbers::pi * uniform());
    out.push_back(DiskFunction::blaschke(std::move(zeros), rotation));
  }
  return out;
}

struct ResidualForm {
  const char* root_id;
  const char* lambda_id;
  double (*residual)(double, double);
};

// Boundary-equality residuals of the lambda rows for f_a at the stated
// radius, written in the collapsed Moebius closed forms.
double residual_a1(double a, double lam) {
  double om = 1 - a * a;
  double x = 25 * om * om / ((25 - a * a) * (25 - a * a));
  return -1 + a + om / 4 + om / (5 - a) + 18.0 / 5.0 * x + lam * x * x;
}
double residual_a2(double a, double lam) {
  double om = 1 - a * a;
  double x = 9 * om * om / (8 * (9 - a * a * a * a));
  return -1 + a + om / 2 + 8.0 / 9.0 * x + lam * x * x;
}
double residual_a3(double a, double lam) {
  double om = 1 - a * a;
  double a4 = a * a * a * a;
  double x = (3 - a) * (3 - a) * om * om / ((4 - a) * (2 - a) * (9 - 6 * a + a * a - a4));
  return -1 + a * a + om / (2 - a) + 9.0 / 8.0 * x + lam * x * x;
}
double residual_area_sq(double a, double lam) {
  double om = 1 - a * a;
  double x = 9 * om * om / ((9 - a * a) * (9 - a * a));
  return -1 + a + om / (3 - a) + 16.0 / 9.0 * x + lam * x * x;
}
double residual_area_sq_f2(double a, double lam) {
  double om = 1 - a * a;
  double x = 9 * om * om / ((9 - a * a) * (9 - a * a));
  double m = (3 * a + 1) / (3 + a);
  return -1 + m * m + om / (3 - a) + 16.0 / 9.0 * x + lam * x * x;
}
double residual_refined_sq(double a, double lam) {
  double om = 1 - a * a;
  double x = 9 * om * om / ((9 - a * a) * (9 - a * a));
  return -1 + a + om / 2 + 8.0 / 9.0 * x + lam * x * x;
}
double residual_refined_sq_f2(double a, double lam) {
  double om = 1 - a * a;
  double x = (3 - a) * (3 - a) * om * om / ((9 - 6 * a) * (9 - 6 * a));
  return -1 + a * a + om / (2 - a) + 9.0 / 8.0 * x + lam * x * x;
}

const ResidualForm& residual_form(std::string_view id) {
  static const std::vector<std::pair<std::string, ResidualForm>> table = {
      {"a1", {"alpha", "lambda_A1", residual_a1}},
      {"a2", {"beta", "lambda_A2", residual_a2}},
      {"a3", {"gamma", "lambda_A3", residual_a3}},
      {"area-sq", {"a_18", "lambda_18", residual_area_sq}},
      {"area-sq-f2", {"a_16", "lambda_16", residual_area_sq_f2}},
      {"refined-sq", {"a_147", "lambda_147", residual_refined_sq}},
      {"refined-sq-f2", {"a_139", "lambda_139", residual_refined_sq_f2}},
  };
  for (const auto& [key, form] : table)
    if (key == id) return form;
  throw std::invalid_argument("boundary_equality: unknown id " + std::string(id));
}

double converged_root(std::string_view root_id) {
  if (root_id == "alpha") return constants::alpha();
  if (root_id == "beta") return constants::beta();
  if (root_id == "gamma") return constants::gamma();
  if (root_id == "a_18") return constants::root_18();
  if (root_id == "a_16") return constants::root_16();
  if (root_id == "a_147") return constants::root_147();
  if (root_id == "a_139") return constants::root_139();
  throw std::invalid_argument("unknown root id");
}

double converged_lambda(std::string_view lambda_id) {
  if (lambda_id == "lambda_A1") return constants::lambda_a1();
  if (lambda_id == "lambda_A2") return constants::lambda_a2();
  if (lambda_id == "lambda_A3") return constants::lambda_a3();
  if (lambda_id == "lambda_18") return constants::lambda_18();
  if (lambda_id == "lambda_16") return constants::lambda_16();
  if (lambda_id == "lambda_147") return constants::lambda_147();
  if (lambda_id == "lambda_139") return constants::lambda_139();
  throw std::invalid_argument("unknown lambda id");
}

std::string_view probe_root_of(functionals::Id id) {
  using functionals::Id;
  switch (id) {
    case Id::A1: return "alpha";
    case Id::A2: return "beta";
    case Id::A3: return "gamma";
    case Id::AreaSq: return "a_18";
    case Id::AreaSqF2: return "a_16";
    case Id::RefinedSq: return "a_147";
    case Id::RefinedSqF2: return "a_139";
    default: return "";
  }
}

DiskFunction sub_psi(functionals::Id id) {
  return id == functionals::Id::SubConvex ? DiskFunction::half_plane() : DiskFunction::koebe();
}

} // namespace

std::string to_string(FamilySpec::Kind kind) {
  switch (kind) {
    case FamilySpec::Kind::Moebius: return "moebius";
    case FamilySpec::Kind::Blaschke: return "blaschke";
    case FamilySpec::Kind::HarmonicExtremal: return "harmonic-extremal";
  }
  return "?";
}

std::string to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::L32: return "l32";
    case Lemma::L34: return "l34";
    case Lemma::L35: return "l35";
    case Lemma::L51: return "l51";
  }
  return "?";
}

Lemma lemma_from_string(std::string_view s) {
  if (s == "l32") return Lemma::L32;
  if (s == "l34") return Lemma::L34;
  if (s == "l35") return Lemma::L35;
  if (s == "l51") return Lemma::L51;
  throw std::invalid_argument("unknown lemma: " + std::string(s));
}

ExecPolicy ExecPolicy::parallel(int threads) {
  return {threads >= 1 ? threads : env_threads()};
}

ExecPolicy ExecPolicy::from_env() { return parallel(0); }

VerificationReport verify_grid(const functionals::FunctionalSpec& spec, const FamilySpec& family,
                               const GridSpec& grid, const ExecPolicy& exec) {
  using functionals::Id;
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.functional = functionals::to_string(spec.id);
  rep.family = to_string(family.kind);
  rep.a_points = grid.a_points;
  rep.r_points = grid.r_points;
  rep.tolerance = grid.tolerance;
  rep.radius_provenance = functionals::radius_provenance(spec.id);

  const bool harmonic = functionals::is_harmonic_row(spec.id);
  ScanBest best;
  Argmax arg;

  if (!harmonic) {
    const bool a0_radius = spec.id == Id::A3 || spec.id == Id::RefinedSqF2;
    if (family.kind == FamilySpec::Kind::Moebius) {
      const double fixed_radius = a0_radius ? 0.0 : functionals::stated_radius(spec);
      const long long count = static_cast<long long>(grid.a_points) * grid.r_points;
      auto margin_at = [&](long long i) -> double {
        int ia = static_cast<int>(i / grid.r_points);
        int ir = static_cast<int>(i % grid.r_points);
        double a = grid_value(grid.a_max, ia, grid.a_points);
        double rmax = a0_radius ? 1.0 / (3.0 - a) : fixed_radius;
        double r = grid_value(rmax, ir, grid.r_points);
        DiskFunction f = DiskFunction::moebius(a);
        try {
          return functionals::lhs(spec, f, r) - functionals::rhs(spec, f);
        } catch (const SingularInputError&) {
          return kNaN;
        }
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        int ia = static_cast<int>(best.idx / grid.r_points);
        int ir = static_cast<int>(best.idx % grid.r_points);
        arg.a = grid_value(grid.a_max, ia, grid.a_points);
        double rmax = a0_radius ? 1.0 / (3.0 - arg.a) : fixed_radius;
        arg.r = grid_value(rmax, ir, grid.r_points);
      }
    } else if (family.kind == FamilySpec::Kind::Blaschke) {
      const std::vector<DiskFunction> fs = sample_blaschke(family);
      const double fixed_radius = a0_radius ? 0.0 : functionals::stated_radius(spec);
      const long long count = static_cast<long long>(fs.size()) * grid.r_points;
      auto margin_at = [&](long long i) -> double {
        int is = static_cast<int>(i / grid.r_points);
        int ir = static_cast<int>(i % grid.r_points);
        const DiskFunction& f = fs[is];
        double rmax = a0_radius ? 1.0 / (3.0 - std::abs(f.a0())) : fixed_radius;
        double r = grid_value(rmax, ir, grid.r_points);
        try {
          return functionals::lhs(spec, f, r) - functionals::rhs(spec, f);
        } catch (const SingularInputError&) {
          return kNaN;
        }
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        int is = static_cast<int>(best.idx / grid.r_points);
        int ir = static_cast<int>(best.idx % grid.r_points);
        arg.a = std::abs(fs[is].a0());
        double rmax = a0_radius ? 1.0 / (3.0 - arg.a) : fixed_radius;
        arg.r = grid_value(rmax, ir, grid.r_points);
      }
    } else {
      throw std::invalid_argument("analytic functional needs an analytic family");
    }
  } else {
    if (family.kind != FamilySpec::Kind::HarmonicExtremal)
      throw std::invalid_argument("harmonic functional needs the harmonic-extremal family");
    const std::vector<double> ks = default_k(grid);
    rep.k_values = ks;
    const bool sub_row = spec.id == Id::SubConvex || spec.id == Id::SubUniv;
    const int a_pts = sub_row ? 1 : grid.a_points;
    const long long per_k = static_cast<long long>(a_pts) * grid.r_points;
    const long long count = static_cast<long long>(ks.size()) * per_k;
    // stated radius and bound per k slice
    std::vector<double> rmax_k(ks.size());
    for (size_t i = 0; i < ks.size(); ++i) {
      functionals::FunctionalSpec s = spec;
      s.k = ks[i];
      rmax_k[i] = functionals::stated_radius(s);
    }
    auto subject_at = [&](double a, double k) {
      return sub_row ? HarmonicPair::subordinate(sub_psi(spec.id), k)
                     : HarmonicPair::extremal(a, k);
    };
    auto margin_at = [&](long long i) -> double {
      int ik = static_cast<int>(i / per_k);
      long long rem = i % per_k;
      int ia = static_cast<int>(rem / grid.r_points);
      int ir = static_cast<int>(rem % grid.r_points);
      double a = sub_row ? 0.0 : grid_value(grid.a_max, ia, a_pts);
      double r = grid_value(rmax_k[ik], ir, grid.r_points);
      HarmonicPair pair = subject_at(a, ks[ik]);
      try {
        return functionals::lhs(spec, pair, r) - functionals::rhs(spec, pair);
      } catch (const SingularInputError&) {
        return kNaN;
      }
    };
    best = scan_points(count, exec, margin_at);
    rep.points = count;
    if (best.idx >= 0) {
      int ik = static_cast<int>(best.idx / per_k);
      long long rem = best.idx % per_k;
      int ia = static_cast<int>(rem / grid.r_points);
      int ir = static_cast<int>(rem % grid.r_points);
      arg.k = ks[ik];
      arg.a = sub_row ? 0.0 : grid_value(grid.a_max, ia, a_pts);
      arg.r = grid_value(rmax_k[ik], ir, grid.r_points);
    }
  }

  rep.worst_margin = best.margin;
  rep.argmax = arg;
  rep.flagged = best.flagged;
  rep.pass = best.idx >= 0 && best.margin <= grid.tolerance;
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

BoundaryResidual boundary_equality(std::string_view id) {
  const ResidualForm& form = residual_form(id);
  double printed_root = constants::entry(form.root_id).printed;
  double printed_lambda = constants::entry(form.lambda_id).printed;
  BoundaryResidual out;
  out.id = std::string(id);
  out.residual = std::fabs(form.residual(printed_root, printed_lambda));
  out.residual_recomputed =
      std::fabs(form.residual(converged_root(form.root_id), converged_lambda(form.lambda_id)));
  return out;
}

ProbeResult sharpness_probe(const functionals::FunctionalSpec& spec, const Perturbation& pert) {
  using functionals::Id;
  ProbeResult out;

  if (pert.kind == Perturbation::Kind::LambdaScale) {
    if (!functionals::has_lambda(spec.id))
      throw std::invalid_argument("lambda-scale probe needs a lambda row");
    if (!(pert.amount > 1.0))
      throw std::invalid_argument("lambda-scale probe needs scale > 1");
    const double root = converged_root(probe_root_of(spec.id));
    functionals::FunctionalSpec s = spec;
    s.lambda = pert.amount * spec.lambda.value_or(functionals::catalog_lambda(spec.id));
    const bool a0_radius = spec.id == Id::A3 || spec.id == Id::RefinedSqF2;
    auto margin_of = [&](double a) {
      double r = a0_radius ? 1.0 / (3.0 - a) : functionals::stated_radius(s);
      DiskFunction f = DiskFunction::moebius(a);
      try {
        return functionals::lhs(s, f, r) - 1.0;
      } catch (const SingularInputError&) {
        return -std::numeric_limits<double>::infinity();
      }
    };
    // 1e-4 grid around the extremal root, then a golden-section refinement
    double lo = std::max(0.0, root - 0.05), hi = std::min(1.0 - 1e-9, root + 0.05);
    double best_a = lo, best_m = -std::numeric_limits<double>::infinity();
    for (double a = lo; a <= hi; a += 1e-4) {
      double m = margin_of(a);
      if (m > best_m) { best_m = m; best_a = a; }
    }
    double refined = golden_max(margin_of, std::max(lo, best_a - 1e-4),
                                std::min(hi, best_a + 1e-4), 1e-12);
    if (margin_of(refined) > best_m) { best_m = margin_of(refined); best_a = refined; }
    out.a = best_a;
    out.r = a0_radius ? 1.0 / (3.0 - best_a) : functionals::stated_radius(s);
    out.margin = best_m;
    out.violated = best_m > kViolationThreshold;
    return out;
  }

  // radius excess (amount >= 0); a-to-one is the zero-excess variant
  const double excess = pert.kind == Perturbation::Kind::RadiusExcess ? pert.amount : 0.0;
  if (excess < 0.0) throw std::invalid_argument("radius excess must be >= 0");

  if (functionals::is_harmonic_row(spec.id)) {
    const double k = spec.k.value_or(0.0);
    out.k = k;
    const double r = std::min(1.0 - 1e-9, functionals::stated_radius(spec) + excess);
    out.r = r;
    const bool sub_row = spec.id == Id::SubConvex || spec.id == Id::SubUniv;
    if (sub_row) {
      HarmonicPair pair = HarmonicPair::subordinate(sub_psi(spec.id), k);
      out.margin = functionals::lhs(spec, pair, r) - functionals::rhs(spec, pair);
      out.violated = out.margin > kViolationThreshold;
      return out;
    }
    // witnesses a -> 1^-
    out.margin = -std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 8; ++j) {
      double a = 1.0 - std::pow(10.0, -j);
      HarmonicPair pair = HarmonicPair::extremal(a, k);
      double m = functionals::lhs(spec, pair, r) - functionals::rhs(spec, pair);
      if (m > out.margin) { out.margin = m; out.a = a; }
    }
    out.violated = out.margin > kViolationThreshold;
    return out;
  }

  // analytic rows: coarse a-grid plus the a -> 1^- sequence
  functionals::FunctionalSpec s = spec;
  const bool a0_radius = spec.id == Id::A3 || spec.id == Id::RefinedSqF2;
  auto margin_of = [&](double a) {
    double r = a0_radius ? 1.0 / (3.0 - a) : functionals::stated_radius(s);
    r = std::min(1.0 - 1e-9, r + excess);
    DiskFunction f = DiskFunction::moebius(a);
    try {
      return functionals::lhs(s, f, r) - 1.0;
    } catch (const SingularInputError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  double best_a = 0.0, best_m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 999; ++i) {
    double a = i / 1000.0;
    double m = margin_of(a);
    if (m > best_m) { best_m = m; best_a = a; }
  }
  for (int j = 1; j <= 8; ++j) {
    double a = 1.0 - std::pow(10.0, -j);
    double m = margin_of(a);
    if (m > best_m) { best_m = m; best_a = a; }
  }
  double refined = golden_max(margin_of, std::max(0.0, best_a - 1e-3),
                              std::min(1.0 - 1e-9, best_a + 1e-3), 1e-12);
  if (margin_of(refined) > best_m) { best_m = margin_of(refined); best_a = refined; }
  out.a = best_a;
  out.r = std::min(1.0 - 1e-9, (a0_radius ? 1.0 / (3.0 - best_a) : functionals::stated_radius(s)) + excess);
  out.margin = best_m;
  out.violated = best_m > kViolationThreshold;
  return out;
}

namespace {

// Envelope margins (lhs - bound), one lemma at a time, for an analytic f.
double envelope_margin(Lemma lemma, const DiskFunction& f, double r) {
  const double a0 = std::abs(f.a0());
  switch (lemma) {
    case Lemma::L32: {
      double d = 1.0 - a0 * a0 * r * r;
      double bound = r * r * (1 - a0 * a0) * (1 - a0 * a0) / (d * d);
      return f.area_ratio(r) - bound;
    }
    case Lemma::L34: {
      double bound = a0 >= r ? r * (1 - a0 * a0) / (1 - r * a0)
                             : r * std::sqrt(1 - a0 * a0) / std::sqrt(1 - r * r);
      return f.majorant_tail(r, 1) - bound;
    }
    case Lemma::L35: {
      double factor = 1.0 / (1.0 + a0) + r / (1.0 - r);
      double bound = (1 - a0 * a0) * r / (1 - r);
      return f.majorant_tail(r, 1) + factor * f.quadratic_sum(r, 1) - bound;
    }
    default:
      throw std::logic_error("envelope_margin: L51 takes a pair");
  }
}

} // namespace

VerificationReport envelope_suite(Lemma lemma, const FamilySpec& family, const GridSpec& grid,
                                  const ExecPolicy& exec) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.functional = to_string(lemma);
  rep.family = to_string(family.kind);
  rep.a_points = grid.a_points;
  rep.r_points = grid.r_points;
  rep.tolerance = grid.tolerance;
  rep.radius_provenance = "envelope";

  const double r_cap = lemma == Lemma::L32 ? 1.0 / std::sqrt(2.0) : 0.9;
  ScanBest best;
  Argmax arg;

  if (lemma != Lemma::L51) {
    if (family.kind == FamilySpec::Kind::Moebius) {
      const long long count = static_cast<long long>(grid.a_points) * grid.r_points;
      auto margin_at = [&](long long i) {
        int ia = static_cast<int>(i / grid.r_points);
        int ir = static_cast<int>(i % grid.r_points);
        double a = grid_value(grid.a_max, ia, grid.a_points);
        double r = grid_value(r_cap, ir, grid.r_points);
        return envelope_margin(lemma, DiskFunction::moebius(a), r);
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        arg.a = grid_value(grid.a_max, static_cast<int>(best.idx / grid.r_points), grid.a_points);
        arg.r = grid_value(r_cap, static_cast<int>(best.idx % grid.r_points), grid.r_points);
      }
    } else if (family.kind == FamilySpec::Kind::Blaschke) {
      const std::vector<DiskFunction> fs = sample_blaschke(family);
      const long long count = static_cast<long long>(fs.size()) * grid.r_points;
      auto margin_at = [&](long long i) {
        int is = static_cast<int>(i / grid.r_points);
        int ir = static_cast<int>(i % grid.r_points);
        double r = grid_value(r_cap, ir, grid.r_points);
        return envelope_margin(lemma, fs[is], r);
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        arg.a = std::abs(fs[best.idx / grid.r_points].a0());
        arg.r = grid_value(r_cap, static_cast<int>(best.idx % grid.r_points), grid.r_points);
      }
    } else {
      throw std::invalid_argument("lemma envelope needs an analytic family");
    }
  } else {
    const std::vector<double> ks = default_k(grid);
    rep.k_values = ks;
    if (family.kind == FamilySpec::Kind::HarmonicExtremal) {
      const long long per_k = static_cast<long long>(grid.a_points) * grid.r_points;
      const long long count = static_cast<long long>(ks.size()) * per_k;
      auto margin_at = [&](long long i) {
        int ik = static_cast<int>(i / per_k);
        long long rem = i % per_k;
        double a = grid_value(grid.a_max, static_cast<int>(rem / grid.r_points), grid.a_points);
        double r = grid_value(r_cap, static_cast<int>(rem % grid.r_points), grid.r_points);
        return -HarmonicPair::extremal(a, ks[ik]).lemma51_margin(r);
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        int ik = static_cast<int>(best.idx / per_k);
        long long rem = best.idx % per_k;
        arg.k = ks[ik];
        arg.a = grid_value(grid.a_max, static_cast<int>(rem / grid.r_points), grid.a_points);
        arg.r = grid_value(r_cap, static_cast<int>(rem % grid.r_points), grid.r_points);
      }
    } else if (family.kind == FamilySpec::Kind::Blaschke) {
      // pairs g = (k/2)(h - a0) (strict slack) and g = k(h - a0) (equality)
      const std::vector<DiskFunction> fs = sample_blaschke(family);
      const long long per_f = static_cast<long long>(ks.size()) * grid.r_points * 2;
      const long long count = static_cast<long long>(fs.size()) * per_f;
      auto margin_at = [&](long long i) {
        int is = static_cast<int>(i / per_f);
        long long rem = i % per_f;
        int ik = static_cast<int>(rem / (2LL * grid.r_points));
        int which = static_cast<int>((rem / grid.r_points) % 2);
        int ir = static_cast<int>(rem % grid.r_points);
        double k = ks[ik];
        double r = grid_value(r_cap, ir, grid.r_points);
        double scale = which == 0 ? 0.5 * k : k;
        HarmonicPair pair = HarmonicPair::user(
            fs[is], DiskFunction::scaled_tail(fs[is], scale), k);
        return -pair.lemma51_margin(r);
      };
      best = scan_points(count, exec, margin_at);
      rep.points = count;
      if (best.idx >= 0) {
        int is = static_cast<int>(best.idx / per_f);
        long long rem = best.idx % per_f;
        arg.k = ks[rem / (2LL * grid.r_points)];
        arg.a = std::abs(fs[is].a0());
        arg.r = grid_value(r_cap, static_cast<int>(rem % grid.r_points), grid.r_points);
      }
    } else {
      throw std::invalid_argument("L51 needs harmonic-extremal or blaschke families");
    }
  }

  rep.worst_margin = best.margin;
  rep.argmax = arg;
  rep.flagged = best.flagged;
  rep.pass = best.idx >= 0 && best.margin <= grid.tolerance;
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

double l32_moebius_equality_deviation(const GridSpec& grid) {
  // Both sides recomputed along independent routes: the sum by direct
  // truncated summation of the explicit coefficients, the bound in closed
  // form.  The lemma is an identity on the Moebius family.
  const double r_cap = 1.0 / std::sqrt(2.0);
  double worst = 0.0;
  for (int ia = 0; ia < grid.a_points; ++ia) {
    double a = grid_value(grid.a_max, ia, grid.a_points);
    std::vector<cplx> coeffs(160);
    coeffs[0] = a;
    for (int n = 1; n < 160; ++n) coeffs[n] = -(1 - a * a) * std::pow(a, n - 1);
    DiskFunction series = DiskFunction::explicit_series(std::move(coeffs), a, 1 - a * a, true);
    for (int ir = 0; ir < grid.r_points; ++ir) {
      double r = grid_value(r_cap, ir, grid.r_points);
      double d = 1.0 - a * a * r * r;
      double bound = r * r * (1 - a * a) * (1 - a * a) / (d * d);
      worst = std::max(worst, std::fabs(series.area_ratio(r) - bound));
    }
  }
  return worst;
}

BranchMaxResult branch_maximize_a1_star() {
  const double lam = constants::lambda_a1();
  auto value = [lam](double t) {
    double om = 1 - t * t;
    double x = 25 * om * om / ((25 - t * t) * (25 - t * t));
    return t + om / 4 + 1.0 / std::sqrt(24.0) + 18.0 / 5.0 * x + lam * x * x;
  };
  double best_t = 0.0, best_v = value(0.0);
  const int n = 20000;
  for (int i = 0; i <= n; ++i) {
    double t = 0.2 * i / n;
    double v = value(t);
    if (v > best_v) { best_v = v; best_t = t; }
  }
  double refined = golden_max(value, std::max(0.0, best_t - 0.2 / n),
                              std::min(0.2, best_t + 0.2 / n), 1e-13);
  if (value(refined) > best_v) { best_v = value(refined); best_t = refined; }
  return {best_t, best_v, 0.989215};
}

} // namespace bohrlab::verify
