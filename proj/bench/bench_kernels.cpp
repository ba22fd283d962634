// Serial reference against the OpenMP kernels. Each row checks that both
// versions agree before reporting times.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "hsplit/kernels.hpp"

using namespace hsplit;

namespace {

template <typename F>
auto timed(F f, double& seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

template <typename S, typename P>
bool row(const char* name, S serial, P parallel) {
  double ts = 0;
  double tp = 0;
  const auto a = timed(serial, ts);
  const auto b = timed(parallel, tp);
  const bool same = a == b;
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %6.2fx  %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
              same ? "identical" : "MISMATCH");
  return same;
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  bool ok = true;
  ok &= row("remote_density(1000)", [] { return remote_density_serial(1000); },
            [] { return remote_density_parallel(1000); });
  ok &= row("pairing_sweep(12)", [] { return pairing_sweep_serial(12); }, [] { return pairing_sweep_parallel(12); });
  ok &= row("twist_sweep(100)", [] { return twist_sweep_serial(100); }, [] { return twist_sweep_parallel(100); });
  const auto specs = draw_specs(4000, 50, 7, true);
  ok &= row("evaluate_specs(4000, h=50)", [&] { return evaluate_specs_serial(specs); },
            [&] { return evaluate_specs_parallel(specs); });
  return ok ? 0 : 1;
}
