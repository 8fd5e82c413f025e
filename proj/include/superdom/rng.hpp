#pragma once

#include <cstdint>
#include <stdexcept>

namespace superdom {

// splitmix64 stream. Chosen so seeded fixtures replay identically on any
// platform; draws below a bound use plain modulo and that is part of the
// documented contract for reproducible corpora.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
    return next() % bound;
  }

  int index(int size) { return static_cast<int>(below(static_cast<uint64_t>(size))); }

 private:
  uint64_t state_;
};

}  // namespace superdom
