#ifndef PRCURVE_RANDOM_STREAM_HPP_
#define PRCURVE_RANDOM_STREAM_HPP_

#include <cstdint>

namespace prcurve {

// Counter-based pseudo random stream (splitmix64 core).
//
// A stream is identified by (seed, substream). Substreams are derived by
// hashing, so any substream can be constructed in O(1) without consuming
// another stream's state; replicate r of a simulation always sees the same
// values no matter how many workers run. The same (seed, substream) pair
// reproduces the same sequence bit for bit on every platform.
//
// A stream is owned by exactly one worker at a time; it is the only mutable
// object in the sampling path.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t substream = 0)
      : state_(mix(mix(seed) + substream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform draw on the open interval (0, 1); never returns 0 or 1, so the
  // draw can be fed to a quantile function without producing infinities.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace prcurve

#endif  // PRCURVE_RANDOM_STREAM_HPP_
