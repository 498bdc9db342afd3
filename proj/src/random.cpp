#include "crdcache/random.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

#include "crdcache/errors.hpp"

namespace crdcache {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::invalid_params, "bound must be >= 1");
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        const std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

std::uint64_t subfile_payload(std::uint64_t seed, int file, int point) {
    SplitMix64 outer(seed);
    const std::uint64_t label = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(file)) << 32) |
                                static_cast<std::uint32_t>(point);
    SplitMix64 inner(outer.next() ^ label);
    return inner.next();
}

std::vector<int> sample_demands(int K, int N, std::uint64_t seed) {
    if (K < 1) fail(Errc::invalid_params, "user count must be >= 1, got " + std::to_string(K));
    if (N < 1) fail(Errc::invalid_params, "file count must be >= 1, got " + std::to_string(N));
    SplitMix64 rng(seed);
    std::vector<int> demands;
    demands.reserve(static_cast<std::size_t>(K));

    if (N < K) {
        // Distinct demands impossible: independent uniform picks.
        for (int u = 0; u < K; ++u) {
            demands.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(N))));
        }
        return demands;
    }

    if (N <= 4 * K || N <= 1 << 20) {
        // Partial Fisher-Yates: first K entries of a seeded shuffle.
        std::vector<int> files(static_cast<std::size_t>(N));
        std::iota(files.begin(), files.end(), 0);
        for (int u = 0; u < K; ++u) {
            const std::uint64_t j =
                static_cast<std::uint64_t>(u) + rng.below(static_cast<std::uint64_t>(N - u));
            std::swap(files[static_cast<std::size_t>(u)], files[static_cast<std::size_t>(j)]);
            demands.push_back(files[static_cast<std::size_t>(u)]);
        }
        return demands;
    }

    // Sparse regime: rejection-sample distinct files.
    std::unordered_set<int> taken;
    while (static_cast<int>(demands.size()) < K) {
        const int file = static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
        if (taken.insert(file).second) demands.push_back(file);
    }
    return demands;
}

} // namespace crdcache
