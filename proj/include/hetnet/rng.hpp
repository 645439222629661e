#pragma once

#include <cstdint>
#include <functional>

namespace hetnet {

/// splitmix64 step; used to expand (seed, stream) pairs into engine state.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** engine. Each Monte Carlo trial owns an independent instance
/// whose state is derived from (seed, trial index), so the draw sequence of a
/// trial never depends on how trials are partitioned across workers.
class TrialRng {
 public:
  using result_type = uint64_t;

  TrialRng(uint64_t seed, uint64_t stream) {
    uint64_t sm = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    for (auto& word : s_) word = splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ULL; }

  result_type operator()() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

/// Runs fn(trial, rng) for trial in [0, trials) split contiguously over the
/// given worker count (0 = hardware concurrency). Each trial gets its own
/// derived stream, so results are a pure function of (seed, trial).
void parallel_trials(int64_t trials, int threads, uint64_t seed,
                     const std::function<void(int64_t, TrialRng&)>& fn);

}  // namespace hetnet
