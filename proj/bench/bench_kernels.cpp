// Compares the OpenMP kernels against their serial references: exact
// matrix products, exact convolution, Monte Carlo trajectories, and the
// associativity scan. Each row reports serial ms, parallel ms, speedup,
// and whether the results matched bit for bit.

#include <chrono>
#include <cstdio>
#include <string>

#include "groupwalk/matrix.hpp"
#include "groupwalk/omp_compat.hpp"
#include "groupwalk/philox.hpp"
#include "groupwalk/random_dist.hpp"
#include "groupwalk/simulate.hpp"

using namespace groupwalk;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const std::string& label, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-36s %10.1f ms %10.1f ms   x%-6.2f %s\n", label.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) omp_set_num_threads(std::stoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-36s %13s %13s   %-7s %s\n", "kernel", "serial", "parallel", "speedup",
              "check");

  {
    const FiniteGroup g = FiniteGroup::cyclic(96);
    Philox4x64 rng(1, 0);
    const StochasticMatrix a = convolution_matrix(random_distribution(g, rng, true));
    const StochasticMatrix b = convolution_matrix(random_distribution(g, rng, true));
    StochasticMatrix serial = StochasticMatrix::identity(96);
    StochasticMatrix parallel = StochasticMatrix::identity(96);
    const double st = time_ms([&] { serial = reference::matrix_multiply(a, b); });
    const double pt = time_ms([&] { parallel = matrix_multiply(a, b); });
    report("exact matmul n=96", st, pt, serial == parallel);
  }

  {
    const FiniteGroup g = FiniteGroup::cyclic(1024);
    Philox4x64 rng(2, 0);
    const GroupDistribution x = random_distribution(g, rng, true);
    const GroupDistribution y = random_distribution(g, rng, true);
    const GroupDistribution* serial = nullptr;
    const GroupDistribution* parallel = nullptr;
    GroupDistribution s = x, p = x;
    const double st = time_ms([&] { s = reference::convolve(x, y); });
    const double pt = time_ms([&] { p = convolve(x, y); });
    serial = &s;
    parallel = &p;
    report("exact convolution n=1024", st, pt, *serial == *parallel);
  }

  {
    const FiniteGroup g = FiniteGroup::dihedral(4);
    Philox4x64 rng(3, 0);
    const GroupDistribution xi = random_distribution(g, rng, true);
    SimulationResult s, p;
    const double st = time_ms([&] { s = reference::simulate_walk(xi, 20, 500'000, 12345); });
    const double pt = time_ms([&] { p = simulate_walk(xi, 20, 500'000, 12345); });
    report("simulate D4 m=20 N=500000", st, pt, s == p);
  }

  {
    const CayleyTable t = FiniteGroup::cyclic(320).table();
    bool serial_ok = false, parallel_ok = false;
    const double st = time_ms([&] { serial_ok = !reference::associativity_witness(t); });
    ValidateOptions opts;
    opts.force_assoc = true;
    GroupValidationReport rep;
    const double pt = time_ms([&] { rep = validate_group(t, opts); });
    parallel_ok = rep.is_group;
    report("associativity scan n=320", st, pt, serial_ok == parallel_ok);
  }

  return 0;
}
