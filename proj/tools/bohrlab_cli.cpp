// Command-line front end: reproduce the constants catalog, run grid
// verifications, sharpness probes and lemma envelope suites, and emit
// radius-vs-parameter sweep data.  Exit codes: 0 all checks passed, 1 a
// check failed, 2 usage or configuration error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohrlab/constants.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/report.hpp"
#include "bohrlab/verify.hpp"

namespace {

using nlohmann::ordered_json;

int env_thread_cap() {
  if (const char* s = std::getenv("BOHRLAB_THREADS")) {
    int n = std::atoi(s);
    if (n >= 1) return n;
  }
  return 0;
}

bohrlab::verify::ExecPolicy exec_policy(bool serial, int threads) {
  using bohrlab::verify::ExecPolicy;
  if (serial) return ExecPolicy::serial();
  ExecPolicy pol = threads >= 1 ? ExecPolicy::parallel(threads) : ExecPolicy::from_env();
  if (int cap = env_thread_cap(); cap >= 1 && pol.threads > cap) pol.threads = cap;
  return pol;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return false;
  }
  out << content;
  return static_cast<bool>(out);
}

bool parse_grid(const std::string& s, int& a_points, int& r_points) {
  auto x = s.find('x');
  if (x == std::string::npos) return false;
  try {
    a_points = std::stoi(s.substr(0, x));
    r_points = std::stoi(s.substr(x + 1));
  } catch (...) {
    return false;
  }
  return a_points >= 1 && r_points >= 2;
}

struct CommonVerifyOpts {
  std::string functional;
  std::string family;
  std::string grid = "400x400";
  std::vector<double> k_values;
  int N = 1;
  int samples = 1000;
  int max_degree = 5;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  int threads = 0;
  bool serial = false;
  std::string out;
};

ordered_json grid_echo(const bohrlab::verify::GridSpec& grid, const bohrlab::verify::FamilySpec& fam) {
  ordered_json j;
  j["a_points"] = grid.a_points;
  j["r_points"] = grid.r_points;
  if (!grid.k_values.empty()) j["k_values"] = grid.k_values;
  j["tolerance"] = grid.tolerance;
  j["family"] = bohrlab::verify::to_string(fam.kind);
  if (fam.kind == bohrlab::verify::FamilySpec::Kind::Blaschke) {
    j["samples"] = fam.samples;
    j["max_degree"] = fam.max_degree;
    j["seed"] = fam.seed;
  }
  return j;
}

int run_constants(const std::string& id, const std::string& format, const std::string& out_path) {
  std::vector<bohrlab::constants::Reproduction> rows;
  try {
    if (id == "all") {
      rows = bohrlab::constants::reproduce_all();
    } else {
      rows.push_back(bohrlab::constants::reproduce(id));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  bool pass = true;
  for (const auto& r : rows) pass = pass && r.pass;
  std::string content;
  if (format == "csv") {
    content = bohrlab::report::constants_csv(rows);
  } else {
    ordered_json results = ordered_json::array();
    for (const auto& r : rows) results.push_back(bohrlab::report::to_json(r));
    content = bohrlab::report::render_document("constants", ordered_json{{"id", id}},
                                               std::move(results), pass);
  }
  if (!write_output(out_path, content)) return 2;
  return pass ? 0 : 1;
}

int run_verify(const CommonVerifyOpts& opt) {
  namespace fn = bohrlab::functionals;
  namespace vf = bohrlab::verify;
  fn::FunctionalSpec spec;
  try {
    spec = fn::make_spec(fn::id_from_string(opt.functional));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  spec.N = opt.N;

  vf::GridSpec grid;
  if (!parse_grid(opt.grid, grid.a_points, grid.r_points)) {
    std::cerr << "error: bad --grid, expected AxR like 400x400\n";
    return 2;
  }
  grid.k_values = opt.k_values;
  grid.tolerance = opt.tolerance;

  vf::FamilySpec fam;
  std::string family = opt.family;
  if (family.empty())
    family = fn::is_harmonic_row(spec.id) ? "harmonic-extremal" : "moebius";
  if (family == "moebius") {
    fam = vf::FamilySpec::moebius();
  } else if (family == "blaschke") {
    fam = vf::FamilySpec::blaschke(opt.samples, opt.max_degree, opt.seed);
  } else if (family == "harmonic-extremal") {
    fam = vf::FamilySpec::harmonic_extremal();
  } else {
    std::cerr << "error: unknown family: " << family << "\n";
    return 2;
  }

  vf::VerificationReport rep;
  try {
    rep = vf::verify_grid(spec, fam, grid, exec_policy(opt.serial, opt.threads));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "verify " << rep.functional << ": worst_margin=" << rep.worst_margin
            << " pass=" << (rep.pass ? "true" : "false")
            << " (" << rep.runtime_seconds << "s)\n";
  ordered_json results = ordered_json::array({bohrlab::report::to_json(rep)});
  ordered_json echo = grid_echo(grid, fam);
  echo["functional"] = opt.functional;
  if (!write_output(opt.out, bohrlab::report::render_document("verify", std::move(echo),
                                                              std::move(results), rep.pass)))
    return 2;
  return rep.pass ? 0 : 1;
}

int run_probe(const std::string& functional, std::optional<double> lambda_scale,
              std::optional<double> radius_excess, double k, int N, const std::string& out_path) {
  namespace fn = bohrlab::functionals;
  namespace vf = bohrlab::verify;
  fn::FunctionalSpec spec;
  try {
    spec = fn::make_spec(fn::id_from_string(functional));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  spec.N = N;
  spec.k = k;
  vf::Perturbation pert{};
  if (lambda_scale && radius_excess) {
    std::cerr << "error: give exactly one of --lambda-scale / --radius-excess\n";
    return 2;
  } else if (lambda_scale) {
    pert = vf::Perturbation::lambda_scale(*lambda_scale);
  } else if (radius_excess) {
    pert = vf::Perturbation::radius_excess(*radius_excess);
  } else {
    std::cerr << "error: give one of --lambda-scale / --radius-excess\n";
    return 2;
  }
  vf::ProbeResult probe;
  try {
    probe = vf::sharpness_probe(spec, pert);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  ordered_json echo{{"functional", functional}, {"k", k}, {"N", N}};
  if (lambda_scale) echo["lambda_scale"] = *lambda_scale;
  if (radius_excess) echo["radius_excess"] = *radius_excess;
  ordered_json results = ordered_json::array({bohrlab::report::to_json(probe)});
  if (!write_output(out_path, bohrlab::report::render_document("probe", std::move(echo),
                                                               std::move(results), probe.violated)))
    return 2;
  return probe.violated ? 0 : 1;
}

int run_envelope(const std::string& lemma_name, const CommonVerifyOpts& opt) {
  namespace vf = bohrlab::verify;
  vf::Lemma lemma;
  try {
    lemma = vf::lemma_from_string(lemma_name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  vf::GridSpec grid;
  if (!parse_grid(opt.grid, grid.a_points, grid.r_points)) {
    std::cerr << "error: bad --grid, expected AxR like 400x40\n";
    return 2;
  }
  grid.k_values = opt.k_values;
  grid.tolerance = opt.tolerance;
  vf::FamilySpec fam;
  std::string family = opt.family;
  if (family.empty()) family = lemma == vf::Lemma::L51 ? "harmonic-extremal" : "blaschke";
  if (family == "moebius") {
    fam = vf::FamilySpec::moebius();
  } else if (family == "blaschke") {
    fam = vf::FamilySpec::blaschke(opt.samples, opt.max_degree, opt.seed);
  } else if (family == "harmonic-extremal") {
    fam = vf::FamilySpec::harmonic_extremal();
  } else {
    std::cerr << "error: unknown family: " << family << "\n";
    return 2;
  }
  vf::VerificationReport rep;
  try {
    rep = vf::envelope_suite(lemma, fam, grid, exec_policy(opt.serial, opt.threads));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "envelope " << rep.functional << ": worst_margin=" << rep.worst_margin
            << " pass=" << (rep.pass ? "true" : "false") << "\n";
  ordered_json echo = grid_echo(grid, fam);
  echo["lemma"] = lemma_name;
  ordered_json results = ordered_json::array({bohrlab::report::to_json(rep)});
  if (!write_output(opt.out, bohrlab::report::render_document("envelope", std::move(echo),
                                                              std::move(results), rep.pass)))
    return 2;
  return rep.pass ? 0 : 1;
}

int run_sweep(const std::string& radius_id, const std::vector<double>& ks,
              const std::vector<double>& Ks, const std::vector<int>& Ns,
              const std::string& out_path) {
  namespace cn = bohrlab::constants;
  std::vector<std::pair<double, double>> rows;
  try {
    if (!ks.empty()) {
      for (double k : ks) rows.emplace_back(k, cn::radius(radius_id, {.k = k}));
    } else if (!Ks.empty()) {
      for (double K : Ks) rows.emplace_back(K, cn::radius(radius_id, {.K = K}));
    } else if (!Ns.empty()) {
      for (int N : Ns) rows.emplace_back(N, cn::radius(radius_id, {.N = N}));
    } else {
      std::cerr << "error: sweep needs a nonempty --k, --K or --N list\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!write_output(out_path, bohrlab::report::sweep_csv(rows))) return 2;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for Bohr-type inequalities on the unit disk"};
  app.require_subcommand(1);

  // constants
  auto* c_cmd = app.add_subcommand("constants", "reproduce the constants catalog");
  std::string c_id = "all", c_format = "json", c_out;
  c_cmd->add_option("--id", c_id, "catalog id or 'all'");
  c_cmd->add_option("--format", c_format)->check(CLI::IsMember({"json", "csv"}));
  c_cmd->add_option("--out,--json", c_out, "output path (default stdout)");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "grid verification of one functional");
  CommonVerifyOpts v;
  v_cmd->add_option("--functional", v.functional)->required();
  v_cmd->add_option("--family", v.family, "moebius | blaschke | harmonic-extremal");
  v_cmd->add_option("--grid", v.grid, "AxR points (default 400x400)");
  v_cmd->add_option("--k", v.k_values, "k values for harmonic rows")->delimiter(',');
  v_cmd->add_option("--N", v.N, "tail index for Rogosinski rows");
  v_cmd->add_option("--samples", v.samples);
  v_cmd->add_option("--max-degree", v.max_degree);
  v_cmd->add_option("--seed", v.seed);
  v_cmd->add_option("--tolerance", v.tolerance);
  v_cmd->add_option("--threads", v.threads, "worker threads (BOHRLAB_THREADS caps this)");
  v_cmd->add_flag("--serial", v.serial, "run the serial reference scan");
  v_cmd->add_option("--out,--json", v.out);

  // probe
  auto* p_cmd = app.add_subcommand("probe", "sharpness probe outside the stated regime");
  std::string p_functional, p_out;
  double p_k = 0.0;
  int p_N = 1;
  std::optional<double> p_lambda_scale, p_radius_excess;
  double p_ls = 0.0, p_re = 0.0;
  auto* ls_opt = p_cmd->add_option("--lambda-scale", p_ls, "scale > 1 applied to lambda");
  auto* re_opt = p_cmd->add_option("--radius-excess", p_re, "excess added to the stated radius");
  p_cmd->add_option("--functional", p_functional)->required();
  p_cmd->add_option("--k", p_k);
  p_cmd->add_option("--N", p_N);
  p_cmd->add_option("--out,--json", p_out);

  // envelope
  auto* e_cmd = app.add_subcommand("envelope", "lemma envelope suite");
  CommonVerifyOpts e;
  e.grid = "400x40";
  std::string e_lemma;
  e_cmd->add_option("--lemma", e_lemma, "l32 | l34 | l35 | l51")->required();
  e_cmd->add_option("--family", e.family);
  e_cmd->add_option("--grid", e.grid);
  e_cmd->add_option("--k", e.k_values)->delimiter(',');
  e_cmd->add_option("--samples", e.samples);
  e_cmd->add_option("--max-degree", e.max_degree);
  e_cmd->add_option("--seed", e.seed);
  e_cmd->add_option("--tolerance", e.tolerance);
  e_cmd->add_option("--threads", e.threads);
  e_cmd->add_flag("--serial", e.serial);
  e_cmd->add_option("--out,--json", e.out);

  // sweep
  auto* s_cmd = app.add_subcommand("sweep", "radius-vs-parameter curve data");
  std::string s_radius, s_out;
  std::vector<double> s_k, s_K;
  std::vector<int> s_N;
  s_cmd->add_option("--radius", s_radius, "rogosinski | rogosinski_sq | r1 | r2 | r_u | harm_j | harm_51")
      ->required();
  s_cmd->add_option("--k", s_k)->delimiter(',');
  s_cmd->add_option("--K", s_K)->delimiter(',');
  s_cmd->add_option("--N", s_N)->delimiter(',');
  s_cmd->add_option("--out", s_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (ls_opt->count()) p_lambda_scale = p_ls;
  if (re_opt->count()) p_radius_excess = p_re;

  try {
    if (c_cmd->parsed()) return run_constants(c_id, c_format, c_out);
    if (v_cmd->parsed()) return run_verify(v);
    if (p_cmd->parsed()) return run_probe(p_functional, p_lambda_scale, p_radius_excess, p_k, p_N, p_out);
    if (e_cmd->parsed()) return run_envelope(e_lemma, e);
    if (s_cmd->parsed()) return run_sweep(s_radius, s_k, s_K, s_N, s_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
