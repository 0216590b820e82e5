// Timing comparison of the serial reference scan against the OpenMP kernel
// on representative grids.  Usage: bench-grid [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "bohrlab/functionals.hpp"
#include "bohrlab/verify.hpp"

using namespace bohrlab;

namespace {

double time_seconds(const verify::VerificationReport& rep) { return rep.runtime_seconds; }

void bench_functional(functionals::Id id, const verify::GridSpec& grid, int threads) {
  functionals::FunctionalSpec spec = functionals::make_spec(id);
  verify::FamilySpec fam = functionals::is_harmonic_row(id)
                               ? verify::FamilySpec::harmonic_extremal()
                               : verify::FamilySpec::moebius();
  auto serial = verify::verify_grid(spec, fam, grid, verify::ExecPolicy::serial());
  auto parallel = verify::verify_grid(spec, fam, grid, verify::ExecPolicy::parallel(threads));
  bool same = serial.worst_margin == parallel.worst_margin &&
              serial.argmax.a == parallel.argmax.a && serial.argmax.r == parallel.argmax.r;
  std::printf("%-14s %8lld pts  serial %8.3f ms  omp(%d) %8.3f ms  speedup %5.2fx  identical=%s\n",
              functionals::to_string(id).c_str(), serial.points, 1e3 * time_seconds(serial),
              threads, 1e3 * time_seconds(parallel),
              time_seconds(serial) / time_seconds(parallel), same ? "yes" : "NO");
}

void bench_envelope(verify::Lemma lemma, int threads) {
  verify::GridSpec grid;
  grid.r_points = 40;
  verify::FamilySpec fam = verify::FamilySpec::blaschke(1000, 5, 42);
  auto serial = verify::envelope_suite(lemma, fam, grid, verify::ExecPolicy::serial());
  auto parallel = verify::envelope_suite(lemma, fam, grid, verify::ExecPolicy::parallel(threads));
  bool same = serial.worst_margin == parallel.worst_margin;
  std::printf("%-14s %8lld pts  serial %8.3f ms  omp(%d) %8.3f ms  speedup %5.2fx  identical=%s\n",
              verify::to_string(lemma).c_str(), serial.points, 1e3 * time_seconds(serial), threads,
              1e3 * time_seconds(parallel), time_seconds(serial) / time_seconds(parallel),
              same ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 0;
  verify::ExecPolicy pol = verify::ExecPolicy::parallel(threads);
  std::printf("grid kernels, serial reference vs OpenMP (%d threads)\n\n", pol.threads);

  verify::GridSpec grid;  // 400x400 default
  bench_functional(functionals::Id::Classical, grid, pol.threads);
  bench_functional(functionals::Id::A1, grid, pol.threads);
  bench_functional(functionals::Id::A2, grid, pol.threads);
  bench_functional(functionals::Id::A3, grid, pol.threads);
  bench_functional(functionals::Id::HarmI1, grid, pol.threads);
  bench_functional(functionals::Id::SubUniv, grid, pol.threads);
  bench_envelope(verify::Lemma::L32, pol.threads);
  bench_envelope(verify::Lemma::L35, pol.threads);
  return 0;
}
