#include "bohrlab/constants.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace bohrlab::constants {

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

// Defining polynomials, ascending coefficients.
const Polynomial kPolyAlpha{{32500, -44845, -22435, -370, 14, -1, 1}};
const Polynomial kPolyBeta{{81, -126, -54, 14, -12, 2, 2, -2, -1}};
const Polynomial kPolyGamma{{55647, -212544, 296244, -200754, 61377, 5198, -10420,
                             972, 960, 408, -420, 100, -8}};
const Polynomial kPoly18{{-405, 473, 402, 38, 3, 1}};
const Polynomial kPoly16{{-513, 910, 80, 2, 1}};
const Polynomial kPoly147{{1458, -1756, -1218, -40, 14, 4, 2}};
const Polynomial kPoly139{{-524880, 2344464, -4244238, 4132944, -2361960, 798660,
                           -154386, 17172, -1296}};

const Polynomial& defining_polynomial(std::string_view root_id) {
  if (root_id == "alpha") return kPolyAlpha;
  if (root_id == "beta") return kPolyBeta;
  if (root_id == "gamma") return kPolyGamma;
  if (root_id == "a_18") return kPoly18;
  if (root_id == "a_16") return kPoly16;
  if (root_id == "a_147") return kPoly147;
  if (root_id == "a_139") return kPoly139;
  throw std::invalid_argument("unknown root id");
}

double solve_entry_root(std::string_view root_id) {
  const ConstantEntry& e = entry(root_id);
  const Polynomial& p = defining_polynomial(root_id);
  return find_root([&](double t) { return p(t); }, e.bracket_lo, e.bracket_hi).value;
}

double round_to(double v, int decimals) {
  double s = std::pow(10.0, decimals);
  return std::round(v * s) / s;
}

struct FormulaEntry {
  std::string root_id;
  std::function<double(double)> formula;
};

const FormulaEntry& formula_for(std::string_view id) {
  static const std::vector<std::pair<std::string, FormulaEntry>> table = {
      {"lambda_A1", {"alpha", lambda_a1_formula}},
      {"lambda_A2", {"beta", lambda_a2_formula}},
      {"lambda_A3", {"gamma", lambda_a3_formula}},
      {"lambda_18", {"a_18", lambda_18_formula}},
      {"lambda_16", {"a_16", lambda_16_formula}},
      {"lambda_147", {"a_147", lambda_147_formula}},
      {"lambda_139", {"a_139", lambda_139_formula}},
  };
  for (const auto& [key, fe] : table)
    if (key == id) return fe;
  throw std::invalid_argument("unknown formula id");
}

double closed_form_value(std::string_view id) {
  if (id == "sqrt17") return (std::sqrt(17.0) - 3.0) / 4.0;
  if (id == "rf_univ") return 5.0 - 2.0 * std::sqrt(6.0);
  if (id == "rf_conv") return 1.0 / 5.0;
  if (id == "rogosinski_1") return std::sqrt(5.0) - 2.0;
  if (id == "r1_limit") return (2.0 * std::sqrt(3.0) - 3.0) / 3.0;
  throw std::invalid_argument("unknown closed-form id");
}

} // namespace

const std::vector<ConstantEntry>& catalog() {
  using K = ConstantEntry::Kind;
  // Brackets are chosen inside pole-free subintervals of the lambda
  // denominators (3-5t, 5t-3, 2t-1, 1-7t+4t^2 all stay one-signed on them).
  static const std::vector<ConstantEntry> entries = {
      {"alpha", K::Root, "32500-44845t-22435t^2-370t^3+14t^4-t^5+t^6=0", 0.3, 0.59,
       0.564084, 6, "first main inequality with the |f(z)-a0| term, r <= 1/5"},
      {"beta", K::Root, "81-126t-54t^2+14t^3-12t^4+2t^5+2t^6-2t^7-t^8=0", 0.3, 0.59,
       0.531615, 6, "second main inequality, S_r/(pi-S_r) refinement, r <= 1/3"},
      {"gamma", K::Root, "55647-212544t+296244t^2-...-8t^12=0", 0.3, 0.9,
       0.571317, 6, "third main inequality, |a0|^2 variant, r <= 1/(3-|a0|)"},
      {"a_18", K::Root, "-405+473t+402t^2+38t^3+3t^4+t^5=0", 0.3, 0.59,
       0.567284, 6, "quadratic-area refinement of the 16/9 inequality"},
      {"a_16", K::Root, "-513+910t+80t^2+2t^3+t^4=0", 0.3, 0.9,
       0.537869, 6, "quadratic-area refinement with the |f(z)|^2 term"},
      {"a_147", K::Root, "1458-1756t-1218t^2-40t^3+14t^4+4t^5+2t^6=0", 0.3, 0.59,
       0.587459, 6, "refined quadratic-area inequality, r <= 1/3"},
      {"a_139", K::Root, "-524880+2344464t-...-1296t^8=0", 0.3, 0.9,
       0.638302, 6, "refined quadratic-area inequality, r <= 1/(3-|a0|)"},
      {"lambda_A1", K::FormulaAtRoot,
       "(25-a^2)(11125-3810a-2300a^2-30a^3+7a^4)/(2500(1+a)^3(3-5a)) at a=alpha", 0, 0,
       118.383318, 6, "first main inequality"},
      {"lambda_A2", K::FormulaAtRoot,
       "32(27+18a+27a^2-28a^3-15a^4-6a^5-7a^6)/(81(1+a)^3(3-5a)) at a=beta", 0, 0,
       12.342793, 6, "second main inequality"},
      {"lambda_A3", K::FormulaAtRoot,
       "(-13581+22491a-...+40a^9)/(8(3-a)^3(1+a)^2(1-7a+4a^2)) at a=gamma", 0, 0,
       10.787939, 6, "third main inequality"},
      {"lambda_18", K::FormulaAtRoot,
       "4(486-261a-324a^2+2a^3+30a^4+3a^5)/(81(1+a)^3(3-5a)) at a=a_18", 0, 0,
       18.6095, 4, "quadratic-area refinement of the 16/9 inequality"},
      {"lambda_16", K::FormulaAtRoot,
       "(-81+1044a+54a^2-116a^3-5a^4)/(162(a+1)^2(2a-1)) at a=a_16", 0, 0,
       16.4618, 4, "quadratic-area refinement with the |f(z)|^2 term"},
      {"lambda_147", K::FormulaAtRoot,
       "(-2673+2502a+2025a^2-332a^3-255a^4+6a^5+7a^6)/(162(1+a)^3(5a-3)) at a=a_147", 0, 0,
       14.796883, 6, "refined quadratic-area inequality, r <= 1/3"},
      {"lambda_139", K::FormulaAtRoot,
       "boundary equality of its inequality at a=a_139, r=1/(3-a)", 0, 0,
       13.966088, 6, "refined quadratic-area inequality, r <= 1/(3-|a0|)"},
      {"sqrt17", K::ClosedForm, "(sqrt(17)-3)/4", 0, 0,
       0.280776, 6, "radius of the |f(z)|+|f'(z)||z| variant"},
      {"rf_univ", K::ClosedForm, "5-2 sqrt(6)", 0, 0,
       0.101021, 6, "subordination radius, univalent majorant"},
      {"rf_conv", K::ClosedForm, "1/5", 0, 0,
       0.2, 6, "subordination radius, convex majorant"},
      {"rogosinski_1", K::ClosedForm, "sqrt(5)-2", 0, 0,
       0.236068, 6, "radius when |a0| is replaced by |f(z)|"},
      {"r1_limit", K::ClosedForm, "(2 sqrt(3)-3)/3", 0, 0,
       0.154701, 6, "harmonic radius r1 at k=1, root of 3r^2+6r-1"},
  };
  return entries;
}

const ConstantEntry& entry(std::string_view id) {
  for (const ConstantEntry& e : catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown constant id: " + std::string(id));
}

Reproduction reproduce(std::string_view id) {
  const ConstantEntry& e = entry(id);
  Reproduction out;
  out.id = e.id;
  out.printed = e.printed;
  switch (e.kind) {
    case ConstantEntry::Kind::Root: {
      out.value = solve_entry_root(id);
      out.converged = out.value;
      out.tolerance = 1e-6;
      break;
    }
    case ConstantEntry::Kind::FormulaAtRoot: {
      const FormulaEntry& fe = formula_for(id);
      const ConstantEntry& root_entry = entry(fe.root_id);
      double root = solve_entry_root(fe.root_id);
      out.converged = fe.formula(root);
      out.value = fe.formula(round_to(root, root_entry.printed_decimals));
      out.tolerance = 1e-4;
      break;
    }
    case ConstantEntry::Kind::ClosedForm: {
      out.value = closed_form_value(id);
      out.converged = out.value;
      out.tolerance = 1e-6;
      break;
    }
  }
  out.delta = std::fabs(out.value - out.printed);
  out.pass = out.delta <= out.tolerance;
  return out;
}

std::vector<Reproduction> reproduce_all() {
  std::vector<Reproduction> out;
  for (const ConstantEntry& e : catalog()) out.push_back(reproduce(e.id));
  return out;
}

double alpha()    { static const double v = solve_entry_root("alpha"); return v; }
double beta()     { static const double v = solve_entry_root("beta"); return v; }
double gamma()    { static const double v = solve_entry_root("gamma"); return v; }
double root_18()  { static const double v = solve_entry_root("a_18"); return v; }
double root_16()  { static const double v = solve_entry_root("a_16"); return v; }
double root_147() { static const double v = solve_entry_root("a_147"); return v; }
double root_139() { static const double v = solve_entry_root("a_139"); return v; }

double lambda_a1()  { static const double v = lambda_a1_formula(alpha()); return v; }
double lambda_a2()  { static const double v = lambda_a2_formula(beta()); return v; }
double lambda_a3()  { static const double v = lambda_a3_formula(gamma()); return v; }
double lambda_18()  { static const double v = lambda_18_formula(root_18()); return v; }
double lambda_16()  { static const double v = lambda_16_formula(root_16()); return v; }
double lambda_147() { static const double v = lambda_147_formula(root_147()); return v; }
double lambda_139() { static const double v = lambda_139_formula(root_139()); return v; }

double lambda_a1_formula(double a) {
  double num = (25 - a * a) * (11125 + a * (-3810 + a * (-2300 + a * (-30 + 7 * a))));
  double den = 2500 * std::pow(1 + a, 3) * (3 - 5 * a);
  return num / den;
}

double lambda_a2_formula(double a) {
  double num = 32 * (27 + a * (18 + a * (27 + a * (-28 + a * (-15 + a * (-6 - 7 * a))))));
  double den = 81 * std::pow(1 + a, 3) * (3 - 5 * a);
  return num / den;
}

double lambda_a3_formula(double a) {
  Polynomial num{{-13581, 22491, -14085, -2584, 8565, -5130, 903, 636, -324, 40}};
  double den = 8 * std::pow(3 - a, 3) * (1 + a) * (1 + a) * (1 - 7 * a + 4 * a * a);
  return num(a) / den;
}

double lambda_18_formula(double a) {
  double num = 4 * (486 + a * (-261 + a * (-324 + a * (2 + a * (30 + 3 * a)))));
  double den = 81 * std::pow(1 + a, 3) * (3 - 5 * a);
  return num / den;
}

double lambda_16_formula(double a) {
  double num = -81 + a * (1044 + a * (54 + a * (-116 - 5 * a)));
  double den = 162 * (a + 1) * (a + 1) * (2 * a - 1);
  return num / den;
}

double lambda_147_formula(double a) {
  double num = -2673 + a * (2502 + a * (2025 + a * (-332 + a * (-255 + a * (6 + 7 * a)))));
  double den = 162 * std::pow(1 + a, 3) * (5 * a - 3);
  return num / den;
}

double lambda_139_formula(double a) {
  // lambda making the inequality an equality for f_a at a and r = 1/(3-a):
  //   a^2 + (1-a^2)/(2-a) + (9/8) x + lambda x^2 = 1,
  //   x = S_r/pi = (3-a)^2 (1-a^2)^2 / (9-6a)^2.
  double one_m = 1 - a * a;
  double x = (3 - a) * (3 - a) * one_m * one_m / ((9 - 6 * a) * (9 - 6 * a));
  return (1 - a * a - one_m / (2 - a) - 9.0 / 8.0 * x) / (x * x);
}

double rogosinski_radius(int N) {
  if (N < 1) throw std::domain_error("rogosinski_radius: N must be >= 1");
  auto f = [N](double r) { return 2 * (1 + r) * std::pow(r, N) - (1 - r) * (1 - r); };
  return find_root(f, 1e-9, 1.0 - 1e-9).value;
}

double rogosinski_sq_radius(int N) {
  if (N < 1) throw std::domain_error("rogosinski_sq_radius: N must be >= 1");
  auto f = [N](double r) { return (1 + r) * std::pow(r, N) - (1 - r) * (1 - r); };
  return find_root(f, 1e-9, 1.0 - 1e-9).value;
}

double r1(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("r1: k must be in [0, 1]");
  auto f = [k](double r) { return 2 * (k + 1) * r * (1 + r) - (1 - r) * (1 - r); };
  return find_root(f, 1e-9, 1.0 - 1e-9).value;
}

double r2(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("r2: k must be in [0, 1]");
  auto f = [k](double r) { return (k + 1) * r * (1 + r) - (1 - r) * (1 - r); };
  return find_root(f, 1e-9, 1.0 - 1e-9).value;
}

double r_u(double k) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("r_u: k must be in [0, 1]");
  auto f = [k](double r) { return 8 * r + 4 * k * r * std::sqrt(1 + r) - (1 - r) * (1 - r); };
  return find_root(f, 1e-9, 1.0 - 1e-9).value;
}

double harm_j_radius(double K) {
  if (std::isinf(K)) return 1.0 / 7.0;
  if (!(K >= 1.0)) throw std::domain_error("harm_j_radius: K must be >= 1");
  return (K + 1) / (7 * K + 3);
}

double harm_51_radius(double K) {
  if (std::isinf(K)) return 1.0 / 5.0;
  if (!(K >= 1.0)) throw std::domain_error("harm_51_radius: K must be >= 1");
  return (K + 1) / (5 * K + 1);
}

double radius(std::string_view id, const RadiusParams& params) {
  auto need_n = [&] {
    if (!params.N) throw std::invalid_argument("radius: missing parameter N");
    return *params.N;
  };
  auto need_k = [&] {
    if (!params.k) throw std::invalid_argument("radius: missing parameter k");
    return *params.k;
  };
  if (id == "rogosinski") return rogosinski_radius(need_n());
  if (id == "rogosinski_sq") return rogosinski_sq_radius(need_n());
  if (id == "r1") return r1(need_k());
  if (id == "r2") return r2(need_k());
  if (id == "r_u") return r_u(need_k());
  if (id == "harm_j") {
    if (params.K) return harm_j_radius(*params.K);
    if (params.k) return 1.0 / (5.0 + 2.0 * *params.k);
    throw std::invalid_argument("radius: harm_j needs K or k");
  }
  if (id == "harm_51") {
    if (!params.K) throw std::invalid_argument("radius: harm_51 needs K");
    return harm_51_radius(*params.K);
  }
  if (id == "inv_3_minus_a0") {
    if (!params.a0) throw std::invalid_argument("radius: inv_3_minus_a0 needs a0");
    if (!(std::fabs(*params.a0) < 1.0)) throw std::domain_error("radius: |a0| must be < 1");
    return 1.0 / (3.0 - std::fabs(*params.a0));
  }
  throw std::invalid_argument("radius: unknown id " + std::string(id));
}

} // namespace bohrlab::constants
