#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace argnn {

// Deterministic random source used everywhere in the simulator.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Every derived draw below is defined directly on the raw
// 64-bit output; standard-library distributions are avoided because their
// mappings are implementation-defined. A seed therefore reproduces
// bit-identical runs on any conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1): the top 53 bits of the engine output.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1).
  double symmetric_unit() { return 2.0 * unit() - 1.0; }

  // Uniform integer in [0, n). Plain modulo keeps the mapping portable;
  // the bias is negligible for the small n used here.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  int bit() { return static_cast<int>(below(2)); }

  // Fisher-Yates: i runs n-1 .. 1, j = below(i + 1), swap(v[i], v[j]).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace argnn
