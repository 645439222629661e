#include "hetnet/rng.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace hetnet {

void parallel_trials(int64_t trials, int threads, uint64_t seed,
                     const std::function<void(int64_t, TrialRng&)>& fn) {
  if (trials <= 0) return;
  unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<uint64_t>(n, static_cast<uint64_t>(trials));
  if (n <= 1) {
    for (int64_t t = 0; t < trials; ++t) {
      TrialRng rng(seed, static_cast<uint64_t>(t));
      fn(t, rng);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  const int64_t chunk = (trials + n - 1) / n;
  for (unsigned w = 0; w < n; ++w) {
    const int64_t lo = w * chunk;
    const int64_t hi = std::min<int64_t>(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, seed, &fn] {
      for (int64_t t = lo; t < hi; ++t) {
        TrialRng rng(seed, static_cast<uint64_t>(t));
        fn(t, rng);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hetnet
