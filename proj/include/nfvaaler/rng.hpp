#ifndef NFV_RNG_HPP
#define NFV_RNG_HPP

#include <cstdint>

namespace nfv {

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: the value at (index, coord) depends only on
// (seed, stream, index, coord), so sampling partitions freely across
// workers without changing the stream.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    uint64_t bits(uint64_t index, uint64_t coord) const {
        uint64_t h = mix64(seed_ ^ 0x6a09e667f3bcc909ULL);
        h = mix64(h ^ stream_);
        h = mix64(h ^ index);
        return mix64(h ^ coord);
    }

    // Uniform in [0, 1).
    double uniform(uint64_t index, uint64_t coord) const {
        return (double)(bits(index, coord) >> 11) * 0x1.0p-53;
    }

  private:
    uint64_t seed_;
    uint64_t stream_;
};

} // namespace nfv

#endif
