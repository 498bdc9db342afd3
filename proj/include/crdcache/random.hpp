#ifndef CRDCACHE_RANDOM_HPP
#define CRDCACHE_RANDOM_HPP

#include <cstdint>
#include <vector>

namespace crdcache {

// SplitMix64: tiny, fast, platform-independent PRNG. Used everywhere a
// seed appears so that identical seeds give identical bytes on any
// machine (std::mt19937 + distributions would not guarantee that across
// standard libraries).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, bound) without modulo bias; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

// Stateless hash of (seed, file, point) used to instantiate subfile
// payloads: the same triple always yields the same 64-bit word.
std::uint64_t subfile_payload(std::uint64_t seed, int file, int point);

// Seeded demand assignment for K users and N files. Distinct demands
// whenever N >= K (a partial Fisher-Yates shuffle of the file indices);
// independent uniform picks (repeats possible) when N < K.
std::vector<int> sample_demands(int K, int N, std::uint64_t seed);

} // namespace crdcache

#endif
