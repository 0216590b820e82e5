#include "bohrlab/functionals.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bohrlab/constants.hpp"
#include "bohrlab/rootfind.hpp"

namespace bohrlab::functionals {

namespace {

struct Row {
  Id id;
  const char* name;
  bool harmonic;
};

constexpr Row kRows[] = {
    {Id::Classical, "classical", false},
    {Id::RogosinskiN, "rogosinski-n", false},
    {Id::RogosinskiSqN, "rogosinski-sq-n", false},
    {Id::Area169, "area-16-9", false},
    {Id::Area98, "area-9-8", false},
    {Id::AreaSq, "area-sq", false},
    {Id::AreaSqF2, "area-sq-f2", false},
    {Id::Odds169, "odds-16-9", false},
    {Id::Odds98, "odds-9-8", false},
    {Id::Refined, "refined", false},
    {Id::RefinedDist, "refined-dist", false},
    {Id::RefinedSq, "refined-sq", false},
    {Id::RefinedSqF2, "refined-sq-f2", false},
    {Id::A1, "a1", false},
    {Id::A2, "a2", false},
    {Id::A3, "a3", false},
    {Id::HarmI1, "harm-i1", true},
    {Id::HarmI2, "harm-i2", true},
    {Id::HarmJ, "harm-j", true},
    {Id::SubConvex, "sub-convex", true},
    {Id::SubUniv, "sub-univ", true},
};

const Row& row(Id id) {
  for (const Row& r : kRows)
    if (r.id == id) return r;
  throw std::invalid_argument("unknown functional id");
}

// the refined-term weight (1/(1+|a0|) + r/(1-r))
double refined_factor(const DiskFunction& f, double r) {
  return 1.0 / (1.0 + std::abs(f.a0())) + r / (1.0 - r);
}

double modulus_term(const FunctionalSpec& spec, const DiskFunction& f, double r) {
  if (spec.z_policy.kind == ZPolicy::FixedAngle)
    return std::abs(f.eval(std::polar(r, spec.z_policy.theta)));
  return f.sup_modulus(r);
}

double dist_a0_term(const FunctionalSpec& spec, const DiskFunction& f, double r) {
  if (spec.z_policy.kind == ZPolicy::FixedAngle)
    return std::abs(f.eval(std::polar(r, spec.z_policy.theta)) - f.a0());
  return f.sup_dist_a0(r);
}

int need_n(const FunctionalSpec& spec) {
  if (!spec.N || *spec.N < 1) throw std::invalid_argument("functional needs N >= 1");
  return *spec.N;
}

double need_k(const FunctionalSpec& spec) {
  if (!spec.k) throw std::invalid_argument("functional needs k");
  if (!(*spec.k >= 0.0 && *spec.k <= 1.0)) throw std::invalid_argument("k must be in [0, 1]");
  return *spec.k;
}

} // namespace

FunctionalSpec make_spec(Id id) {
  FunctionalSpec spec;
  spec.id = id;
  if (id == Id::RogosinskiN || id == Id::RogosinskiSqN) spec.N = 1;
  if (is_harmonic_row(id)) spec.k = 0.0;
  return spec;
}

std::string to_string(Id id) { return row(id).name; }

Id id_from_string(std::string_view s) {
  for (const Row& r : kRows)
    if (s == r.name) return r.id;
  throw std::invalid_argument("unknown functional id: " + std::string(s));
}

bool is_harmonic_row(Id id) { return row(id).harmonic; }

bool has_lambda(Id id) {
  switch (id) {
    case Id::AreaSq:
    case Id::AreaSqF2:
    case Id::RefinedSq:
    case Id::RefinedSqF2:
    case Id::A1:
    case Id::A2:
    case Id::A3:
      return true;
    default:
      return false;
  }
}

double catalog_lambda(Id id) {
  switch (id) {
    case Id::AreaSq: return constants::lambda_18();
    case Id::AreaSqF2: return constants::lambda_16();
    case Id::RefinedSq: return constants::lambda_147();
    case Id::RefinedSqF2: return constants::lambda_139();
    case Id::A1: return constants::lambda_a1();
    case Id::A2: return constants::lambda_a2();
    case Id::A3: return constants::lambda_a3();
    default:
      throw std::invalid_argument("functional has no lambda");
  }
}

double lhs(const FunctionalSpec& spec, const DiskFunction& f, double r) {
  if (is_harmonic_row(spec.id))
    throw std::invalid_argument("harmonic functional applied to an analytic subject");
  require_radius(r);
  const double lam = has_lambda(spec.id) ? spec.lambda.value_or(catalog_lambda(spec.id)) : 0.0;
  switch (spec.id) {
    case Id::Classical:
      return f.majorant_tail(r, 0);
    case Id::RogosinskiN:
      return modulus_term(spec, f, r) + f.majorant_tail(r, need_n(spec));
    case Id::RogosinskiSqN: {
      double m = modulus_term(spec, f, r);
      return m * m + f.majorant_tail(r, need_n(spec));
    }
    case Id::Area169:
      return f.majorant_tail(r, 0) + 16.0 / 9.0 * f.area_ratio(r);
    case Id::Area98:
      return std::norm(f.a0()) + f.majorant_tail(r, 1) + 9.0 / 8.0 * f.area_ratio(r);
    case Id::AreaSq: {
      double x = f.area_ratio(r);
      return f.majorant_tail(r, 0) + 16.0 / 9.0 * x + lam * x * x;
    }
    case Id::AreaSqF2: {
      double m = modulus_term(spec, f, r);
      double x = f.area_ratio(r);
      return m * m + f.majorant_tail(r, 1) + 16.0 / 9.0 * x + lam * x * x;
    }
    case Id::Odds169:
      return f.majorant_tail(r, 0) + 16.0 / 9.0 * f.area_odds(r);
    case Id::Odds98:
      return std::norm(f.a0()) + f.majorant_tail(r, 1) + 9.0 / 8.0 * f.area_odds(r);
    case Id::Refined:
      return f.majorant_tail(r, 0) + refined_factor(f, r) * f.quadratic_sum(r, 1) +
             8.0 / 9.0 * f.area_ratio(r);
    case Id::RefinedDist:
      return f.majorant_tail(r, 0) + refined_factor(f, r) * f.quadratic_sum(r, 1) +
             dist_a0_term(spec, f, r);
    case Id::RefinedSq: {
      double x = f.area_ratio(r);
      return f.majorant_tail(r, 0) + refined_factor(f, r) * f.quadratic_sum(r, 1) +
             8.0 / 9.0 * x + lam * x * x;
    }
    case Id::RefinedSqF2: {
      double x = f.area_ratio(r);
      return std::norm(f.a0()) + f.majorant_tail(r, 1) +
             refined_factor(f, r) * f.quadratic_sum(r, 1) + 9.0 / 8.0 * x + lam * x * x;
    }
    case Id::A1: {
      double x = f.area_ratio(r);
      return f.majorant_tail(r, 0) + refined_factor(f, r) * f.quadratic_sum(r, 1) +
             dist_a0_term(spec, f, r) + 18.0 / 5.0 * x + lam * x * x;
    }
    case Id::A2: {
      double x = f.area_odds(r);
      return f.majorant_tail(r, 0) + refined_factor(f, r) * f.quadratic_sum(r, 1) +
             8.0 / 9.0 * x + lam * x * x;
    }
    case Id::A3: {
      double x = f.area_odds(r);
      return std::norm(f.a0()) + f.majorant_tail(r, 1) +
             refined_factor(f, r) * f.quadratic_sum(r, 1) + 9.0 / 8.0 * x + lam * x * x;
    }
    default:
      throw std::invalid_argument("unhandled analytic functional");
  }
}

double lhs(const FunctionalSpec& spec, const HarmonicPair& pair, double r) {
  if (!is_harmonic_row(spec.id))
    throw std::invalid_argument("analytic functional applied to a harmonic subject");
  require_radius(r);
  double m = modulus_term(spec, pair.h(), r);
  double co = pair.co_majorant(r, 1);
  switch (spec.id) {
    case Id::HarmI1:
    case Id::HarmJ:
    case Id::SubConvex:
    case Id::SubUniv:
      return m + co;
    case Id::HarmI2:
      return m * m + co;
    default:
      throw std::invalid_argument("unhandled harmonic functional");
  }
}

double rhs(const FunctionalSpec& spec, const DiskFunction&) {
  if (is_harmonic_row(spec.id))
    throw std::invalid_argument("harmonic functional applied to an analytic subject");
  return 1.0;
}

double rhs(const FunctionalSpec& spec, const HarmonicPair& pair) {
  switch (spec.id) {
    case Id::HarmI1:
    case Id::HarmI2: {
      const DiskFunction& h = pair.h();
      if (h.family() == DiskFunction::Family::Moebius) return 1.0;  // ||f_a||_inf = 1
      return h.sup_modulus(1.0 - 1e-6);  // approximate sup-norm
    }
    case Id::HarmJ:
      return 1.0;
    case Id::SubConvex:
    case Id::SubUniv: {
      if (!pair.psi()) throw std::invalid_argument("subordination row needs a pair built from psi");
      const DiskFunction& psi = *pair.psi();
      return std::abs(psi.a0()) + boundary_distance(psi);
    }
    default:
      throw std::invalid_argument("analytic functional applied to a harmonic subject");
  }
}

double boundary_distance(const DiskFunction& psi) {
  switch (psi.family()) {
    case DiskFunction::Family::HalfPlane:
      return 0.5;  // image is Re w > 1/2
    case DiskFunction::Family::Koebe:
      return 0.25; // image omits (-inf, -1/4]
    case DiskFunction::Family::Moebius:
      return 1.0 - psi.moebius_a();  // self-map of the disk, psi(0) = a
    default: {
      // min over the image of a near-boundary circle
      double r = 1.0 - 1e-6;
      cplx c = psi.a0();
      double best = std::numeric_limits<double>::infinity();
      const int m = 4096;
      for (int i = 0; i < m; ++i) {
        double theta = 2.0 * std::numbers::pi * i / m;
        best = std::min(best, std::abs(psi.eval(std::polar(r, theta)) - c));
      }
      return best;
    }
  }
}

double stated_radius(const FunctionalSpec& spec, double a0_mod) {
  switch (spec.id) {
    case Id::Classical:
    case Id::Area169:
    case Id::AreaSq:
    case Id::AreaSqF2:
    case Id::Odds169:
    case Id::Refined:
    case Id::RefinedSq:
    case Id::A2:
      return 1.0 / 3.0;
    case Id::Area98:
    case Id::Odds98:
      return 0.5;
    case Id::RefinedDist:
    case Id::A1:
      return 0.2;
    case Id::RefinedSqF2:
    case Id::A3:
      if (!(std::fabs(a0_mod) < 1.0)) throw std::domain_error("stated_radius: |a0| must be < 1");
      return 1.0 / (3.0 - std::fabs(a0_mod));
    case Id::RogosinskiN:
      return constants::rogosinski_radius(need_n(spec));
    case Id::RogosinskiSqN:
      return constants::rogosinski_sq_radius(need_n(spec));
    case Id::HarmI1:
      return constants::r1(need_k(spec));
    case Id::HarmI2:
      return constants::r2(need_k(spec));
    case Id::HarmJ:
    case Id::SubConvex:
      return 1.0 / (5.0 + 2.0 * need_k(spec));
    case Id::SubUniv:
      return constants::r_u(need_k(spec));
  }
  throw std::invalid_argument("unhandled functional id");
}

std::string radius_provenance(Id id) {
  switch (id) {
    case Id::RogosinskiN:
    case Id::RogosinskiSqN:
    case Id::HarmI1:
    case Id::HarmI2:
    case Id::SubUniv:
      return "certified-root";
    default:
      return "closed-form";
  }
}

double coefficient_envelope_subordination(SubordinationKind kind, int n, double dist) {
  if (n < 1) throw std::domain_error("coefficient envelope needs n >= 1");
  if (dist < 0.0) throw std::domain_error("coefficient envelope needs dist >= 0");
  return kind == SubordinationKind::Convex ? 2.0 * dist : 4.0 * n * dist;
}

} // namespace bohrlab::functionals
