#pragma once

#include <cstdint>
#include <random>

namespace kobdd {

/// Seeded random stream used by every generator and sampler in the project.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// draws bounded values by rejection instead of std::uniform_int_distribution,
/// whose mapping is implementation-defined. A fixed seed therefore produces
/// the same stream everywhere, which the reproducibility contracts rely on.
class rng64 {
public:
  explicit rng64(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  bool next_bit() { return (next() & 1u) != 0; }

  /// Uniform draw from [0, bound). bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
      const uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

private:
  std::mt19937_64 engine_;
};

} // namespace kobdd
