// Compares the serial reference simulator with the bit-sliced batch kernel,
// single-threaded and with all OpenMP threads.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "majority/blok.hpp"
#include "majority/ca.hpp"
#include "majority/evaluation.hpp"

using namespace majority;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 10000;
  const auto ics = sample_ics({1, kDefaultLattice}, n);
  const int threads = omp_get_max_threads();
  std::printf("ICs: %llu, lattice %d, max steps %d, threads %d\n",
              static_cast<unsigned long long>(n), kDefaultLattice, kDefaultMaxSteps, threads);
  std::printf("%-6s %10s %10s %10s %10s %8s\n", "rule", "perf", "reference", "batch/1", "batch/omp", "speedup");

  for (const auto& named : kBestKnownRules) {
    const Rule rule = parse_rule_hex(named.hex);
    std::size_t ref_correct = 0;
    const double t_ref = seconds([&] {
      for (const auto& ic : ics) ref_correct += is_correct(evolve(rule, ic), ic);
    });
    std::size_t serial_correct = 0;
    omp_set_num_threads(1);
    const double t_serial = seconds([&] { serial_correct = count_correct(rule, ics); });
    omp_set_num_threads(threads);
    std::size_t par_correct = 0;
    const double t_par = seconds([&] { par_correct = count_correct(rule, ics); });
    if (ref_correct != serial_correct || ref_correct != par_correct) {
      std::printf("MISMATCH for %s: %zu %zu %zu\n", std::string(named.name).c_str(), ref_correct,
                  serial_correct, par_correct);
      return 1;
    }
    std::printf("%-6s %10.4f %9.3fs %9.3fs %9.3fs %7.1fx\n", std::string(named.name).c_str(),
                static_cast<double>(ref_correct) / static_cast<double>(n), t_ref, t_serial, t_par,
                t_ref / t_par);
  }
  return 0;
}
