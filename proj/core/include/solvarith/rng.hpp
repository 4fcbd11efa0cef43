#pragma once

#include <cstdint>
#include <vector>

namespace solvarith {

// Deterministic seeded generator (splitmix64). std::uniform_int_distribution is
// implementation-defined, so all bounded draws are done here by rejection; results
// are identical on every platform, which the reproducibility contracts rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Child generator with an independent stream; the parent state is unchanged.
  Rng fork(std::uint64_t stream) const {
    Rng child(state_ ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace solvarith
