// Minimal tour: passage-time constants under a slow bond, the diagonal
// reinforcement of the continuum model, and the TASEP current.

#include <cstdio>

#include "lpplab/lattice.hpp"
#include "lpplab/tasep.hpp"
#include "lpplab/ulam.hpp"

int main() {
  using namespace lpplab;
  const int64_t n = 400;
  const int reps = 20;

  std::printf("lattice LPP, n=%lld, %d replicas:\n", static_cast<long long>(n), reps);
  for (double eps : {0.0, 0.25, 0.5}) {
    double acc = 0.0;
    for (int r = 0; r < reps; ++r) {
      StreamKey key{derive_seed(7, static_cast<uint64_t>(n)), static_cast<uint32_t>(r),
                    static_cast<uint32_t>(Purpose::lattice)};
      acc += passage_time_value(sample_weights(n, eps, 0, key));
    }
    std::printf("  eps=%.2f   mean T_n/n = %.4f\n", eps, acc / reps / static_cast<double>(n));
  }

  std::printf("continuum model, n=%lld, %d replicas:\n", static_cast<long long>(n), reps);
  for (double lambda : {0.0, 2.0}) {
    double acc = 0.0;
    for (int r = 0; r < reps; ++r) {
      StreamKey key{derive_seed(7, static_cast<uint64_t>(n)), static_cast<uint32_t>(r), 0};
      acc += static_cast<double>(reinforced_lis(n, lambda, 0.0, key).length);
    }
    std::printf("  lambda=%.1f mean L_n/n = %.4f\n", lambda, acc / reps / static_cast<double>(n));
  }

  const double t_max = 400.0;
  for (double eps : {0.0, 0.5}) {
    StreamKey key{derive_seed(7, 1), 0, static_cast<uint32_t>(Purpose::tasep)};
    TasepState st = simulate(init_step(620, 620), eps, t_max, key);
    const auto est = current_estimate(st, t_max / 10.0);
    std::printf("tasep eps=%.1f horizon=%.0f: J = %.4f (se %.4f)\n", eps, t_max, est.J,
                est.standard_error);
  }
  return 0;
}
