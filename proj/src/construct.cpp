#include "crdcache/construct.hpp"

#include <algorithm>
#include <string>

namespace crdcache {

namespace {

void check_params(const ConstructionParams& params) {
    if (params.q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(params.q));
    if (params.m < 2) fail(Errc::invalid_params, "m must be >= 2, got " + std::to_string(params.m));
    if (params.t < 1 || params.t >= params.m) {
        fail(Errc::invalid_params, "t must satisfy 0 < t < m, got t = " + std::to_string(params.t) +
                                       " with m = " + std::to_string(params.m));
    }
}

} // namespace

std::vector<int> qary_expand(long long y, int q, int m) {
    if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
    if (m < 1) fail(Errc::invalid_params, "m must be >= 1, got " + std::to_string(m));
    if (y < 0 || BigInt(y) >= ipow(BigInt(q), static_cast<unsigned>(m))) {
        fail(Errc::out_of_range,
             std::to_string(y) + " outside [0, " + std::to_string(q) + "^" + std::to_string(m) + ")");
    }
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(y % q);
        y /= q;
    }
    return digits;
}

PredictedParams predicted_params(const ConstructionParams& params) {
    check_params(params);
    const BigInt q = params.q;
    PredictedParams out;
    out.v = ipow(q, static_cast<unsigned>(params.m));
    out.r = binomial(static_cast<unsigned>(params.m), static_cast<unsigned>(params.t));
    out.b_r = ipow(q, static_cast<unsigned>(params.t));
    out.b = out.r * out.b_r;
    out.k = ipow(q, static_cast<unsigned>(params.m - params.t));
    if (params.t == 1) {
        for (int z = 2; z <= params.m; ++z) {
            out.mu[z] = ipow(q, static_cast<unsigned>(params.m - z));
        }
    }
    return out;
}

Resolution construct(const ConstructionParams& params) {
    check_params(params);
    const PredictedParams predicted = predicted_params(params);
    constexpr long long kMaxPointSlots = 1LL << 28;
    if (predicted.v > (1 << 30) || predicted.b * predicted.k > kMaxPointSlots) {
        fail(Errc::invalid_params, "design too large to materialize: v = " + predicted.v.str() +
                                       ", b*k = " + BigInt(predicted.b * predicted.k).str());
    }

    const int q = params.q;
    const int m = params.m;
    const int t = params.t;
    const int v = static_cast<int>(predicted.v);
    const int free_count = m - t;

    // Powers of q for digit positions.
    std::vector<long long> qpow(static_cast<std::size_t>(m) + 1, 1);
    for (int i = 1; i <= m; ++i) {
        qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * q;
    }

    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(predicted.b));
    std::vector<std::vector<int>> classes;
    classes.reserve(static_cast<std::size_t>(predicted.r));

    // Position subsets J in lexicographic order.
    std::vector<int> subset(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) subset[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<int> free_positions;
        free_positions.reserve(static_cast<std::size_t>(free_count));
        {
            std::size_t s = 0;
            for (int j = 0; j < m; ++j) {
                if (s < subset.size() && subset[s] == j) {
                    ++s;
                } else {
                    free_positions.push_back(j);
                }
            }
        }

        std::vector<int> class_indices;
        class_indices.reserve(static_cast<std::size_t>(predicted.b_r));

        // Fixed tuples a in lexicographic order: the digit on the
        // smallest position of J is the most significant.
        const long long tuple_count = qpow[static_cast<std::size_t>(t)];
        for (long long tuple = 0; tuple < tuple_count; ++tuple) {
            long long base = 0;
            long long rest = tuple;
            for (int p = t - 1; p >= 0; --p) {
                const int digit = static_cast<int>(rest % q);
                rest /= q;
                base += digit * qpow[static_cast<std::size_t>(subset[static_cast<std::size_t>(p)])];
            }

            std::vector<int> block;
            block.reserve(static_cast<std::size_t>(predicted.k));
            const long long member_count = qpow[static_cast<std::size_t>(free_count)];
            for (long long idx = 0; idx < member_count; ++idx) {
                long long y = base;
                long long digits = idx;
                for (int p = 0; p < free_count; ++p) {
                    y += (digits % q) * qpow[static_cast<std::size_t>(
                                            free_positions[static_cast<std::size_t>(p)])];
                    digits /= q;
                }
                block.push_back(static_cast<int>(y));
            }
            std::sort(block.begin(), block.end());
            class_indices.push_back(static_cast<int>(blocks.size()));
            blocks.push_back(std::move(block));
        }
        classes.push_back(std::move(class_indices));

        // Next lexicographic t-subset of {0,...,m-1}.
        int c = t - 1;
        while (c >= 0 && subset[static_cast<std::size_t>(c)] == m - t + c) --c;
        if (c < 0) break;
        ++subset[static_cast<std::size_t>(c)];
        for (int d = c + 1; d < t; ++d) {
            subset[static_cast<std::size_t>(d)] = subset[static_cast<std::size_t>(d - 1)] + 1;
        }
    }

    return validate_resolution(validate_design(v, blocks), std::move(classes));
}

} // namespace crdcache
