#include "crdcache/scheme.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace crdcache {

std::vector<int> Topology::user_blocks(int u) const {
    const SchemeUser& user = users[static_cast<std::size_t>(u)];
    std::vector<int> blocks;
    blocks.reserve(user.class_subset.size());
    for (std::size_t i = 0; i < user.class_subset.size(); ++i) {
        const auto& cls = res.classes[static_cast<std::size_t>(user.class_subset[i])];
        blocks.push_back(cls[static_cast<std::size_t>(user.choice[i])]);
    }
    return blocks;
}

namespace {

// Iterates size-z subsets of {0,...,r-1} in lexicographic order.
bool next_subset(std::vector<int>& subset, int r) {
    const int z = static_cast<int>(subset.size());
    int c = z - 1;
    while (c >= 0 && subset[static_cast<std::size_t>(c)] == r - z + c) --c;
    if (c < 0) return false;
    ++subset[static_cast<std::size_t>(c)];
    for (int d = c + 1; d < z; ++d) {
        subset[static_cast<std::size_t>(d)] = subset[static_cast<std::size_t>(d - 1)] + 1;
    }
    return true;
}

// Odometer over z digits in [0, bound), leftmost digit most significant.
bool next_tuple(std::vector<int>& tuple, int bound) {
    int c = static_cast<int>(tuple.size()) - 1;
    while (c >= 0 && tuple[static_cast<std::size_t>(c)] == bound - 1) {
        tuple[static_cast<std::size_t>(c)] = 0;
        --c;
    }
    if (c < 0) return false;
    ++tuple[static_cast<std::size_t>(c)];
    return true;
}

} // namespace

Topology build_topology(const Resolution& res, int z) {
    const int r = res.r();
    if (z < 2 || z > r) {
        fail(Errc::z_out_of_range,
             "access degree z = " + std::to_string(z) + " outside [2, " + std::to_string(r) + "]");
    }
    const auto mu = cross_intersection_number(res, z);
    if (!mu) {
        const CrdProfile profile = crd_profile(res);
        std::string existing;
        for (const auto& [i, value] : profile.mu) {
            if (!existing.empty()) existing += ", ";
            existing += std::to_string(i);
        }
        fail(Errc::access_degree_unsupported,
             "no cross intersection number at z = " + std::to_string(z) +
                 (existing.empty() ? " (none exists for this design)"
                                   : " (available z: " + existing + ")"));
    }

    Topology topo;
    topo.res = res;
    topo.z = z;
    topo.mu_z = *mu;

    const int b_r = res.blocks_per_class();
    std::vector<int> subset(static_cast<std::size_t>(z));
    for (int i = 0; i < z; ++i) subset[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<int> choice(static_cast<std::size_t>(z), 0);
        do {
            topo.users.push_back(SchemeUser{subset, choice});
        } while (next_tuple(choice, b_r));
    } while (next_subset(subset, r));
    return topo;
}

Placement place(const Topology& topo, int N) {
    if (N < 1) fail(Errc::invalid_params, "file count must be >= 1, got " + std::to_string(N));
    Placement placement;
    placement.N = N;
    placement.v = topo.v();
    placement.k = topo.res.design.k;
    placement.cache_points = topo.res.design.blocks;
    return placement;
}

Rational effective_fraction(const Topology& topo, const SchemeUser& user) {
    if (static_cast<int>(user.class_subset.size()) != topo.z ||
        user.choice.size() != user.class_subset.size()) {
        fail(Errc::invalid_params, "user shape does not match the topology's access degree");
    }
    std::set<int> points;
    for (std::size_t i = 0; i < user.class_subset.size(); ++i) {
        const int c = user.class_subset[i];
        if (c < 0 || c >= topo.res.r()) fail(Errc::invalid_params, "class index out of range");
        const auto& cls = topo.res.classes[static_cast<std::size_t>(c)];
        const int pos = user.choice[i];
        if (pos < 0 || pos >= static_cast<int>(cls.size())) {
            fail(Errc::invalid_params, "block position out of range");
        }
        const Block& block = topo.res.design.blocks[static_cast<std::size_t>(cls[static_cast<std::size_t>(pos)])];
        points.insert(block.begin(), block.end());
    }
    return Rational(static_cast<int>(points.size()), topo.v());
}

DemandVector make_demands(const Topology& topo, std::vector<int> demand, int N) {
    if (N < 1) fail(Errc::invalid_params, "file count must be >= 1, got " + std::to_string(N));
    if (static_cast<int>(demand.size()) != topo.K()) {
        fail(Errc::demand_count_mismatch, "got " + std::to_string(demand.size()) +
                                              " demands for " + std::to_string(topo.K()) +
                                              " users");
    }
    for (int d : demand) {
        if (d < 0 || d >= N) {
            fail(Errc::file_index_out_of_range,
                 "file " + std::to_string(d) + " outside [0, " + std::to_string(N) + ")");
        }
    }
    DemandVector out;
    out.N = N;
    out.distinct =
        std::set<int>(demand.begin(), demand.end()).size() == demand.size();
    out.demand = std::move(demand);
    return out;
}

TransmissionPlan generate_plan(const Topology& topo, const DemandVector& demands) {
    if (static_cast<int>(demands.demand.size()) != topo.K()) {
        fail(Errc::demand_count_mismatch, "demand vector does not match the topology");
    }
    const Resolution& res = topo.res;
    const int z = topo.z;
    const int b_r = res.blocks_per_class();
    const int r = res.r();
    const int pair_count = b_r * (b_r - 1) / 2;

    TransmissionPlan plan;
    plan.v = topo.v();
    if (pair_count == 0) return plan; // single-block classes: nothing to send

    // Unordered position pairs within a class, lexicographic.
    std::vector<std::array<int, 2>> position_pairs;
    position_pairs.reserve(static_cast<std::size_t>(pair_count));
    for (int a = 0; a < b_r; ++a) {
        for (int b = a + 1; b < b_r; ++b) position_pairs.push_back({a, b});
    }

    // b_r powers for user indexing: user index = subset_rank * b_r^z +
    // sum(choice[i] * b_r^{z-1-i}).
    std::vector<long long> br_pow(static_cast<std::size_t>(z) + 1, 1);
    for (int i = 1; i <= z; ++i) {
        br_pow[static_cast<std::size_t>(i)] = br_pow[static_cast<std::size_t>(i - 1)] * b_r;
    }

    std::vector<int> subset(static_cast<std::size_t>(z));
    for (int i = 0; i < z; ++i) subset[static_cast<std::size_t>(i)] = i;
    long long subset_rank = 0;
    do {
        // One unordered pair of block positions per chosen class.
        std::vector<int> pair_pick(static_cast<std::size_t>(z), 0);
        do {
            // Global block indices of each pair.
            std::vector<std::array<int, 2>> pairs(static_cast<std::size_t>(z));
            for (int i = 0; i < z; ++i) {
                const auto& cls = res.classes[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])];
                const auto& pp = position_pairs[static_cast<std::size_t>(pair_pick[static_cast<std::size_t>(i)])];
                pairs[static_cast<std::size_t>(i)] = {cls[static_cast<std::size_t>(pp[0])],
                                                      cls[static_cast<std::size_t>(pp[1])]};
            }

            // For each block selection, precompute the user index and the
            // sorted intersection of the complementary blocks.
            const int selections = 1 << z;
            std::vector<int> users(static_cast<std::size_t>(selections));
            std::vector<Block> complements(static_cast<std::size_t>(selections));
            for (int sel = 0; sel < selections; ++sel) {
                long long user = subset_rank * br_pow[static_cast<std::size_t>(z)];
                std::vector<const Block*> comp;
                comp.reserve(static_cast<std::size_t>(z));
                for (int i = 0; i < z; ++i) {
                    const int bit = (sel >> (z - 1 - i)) & 1;
                    const auto& pp = position_pairs[static_cast<std::size_t>(pair_pick[static_cast<std::size_t>(i)])];
                    user += static_cast<long long>(pp[static_cast<std::size_t>(bit)]) *
                            br_pow[static_cast<std::size_t>(z - 1 - i)];
                    const int comp_block =
                        pairs[static_cast<std::size_t>(i)][static_cast<std::size_t>(1 - bit)];
                    comp.push_back(&res.design.blocks[static_cast<std::size_t>(comp_block)]);
                }
                users[static_cast<std::size_t>(sel)] = static_cast<int>(user);
                complements[static_cast<std::size_t>(sel)] = intersect_blocks(comp);
            }

            for (int slot = 1; slot <= topo.mu_z; ++slot) {
                Transmission tx;
                tx.classes = subset;
                tx.pairs = pairs;
                tx.slot = slot;
                tx.terms.reserve(static_cast<std::size_t>(selections));
                for (int sel = 0; sel < selections; ++sel) {
                    const int u = users[static_cast<std::size_t>(sel)];
                    const int p =
                        complements[static_cast<std::size_t>(sel)][static_cast<std::size_t>(slot - 1)];
                    tx.terms.push_back(Term{u, demands.demand[static_cast<std::size_t>(u)], p});
                }
                plan.transmissions.push_back(std::move(tx));
            }
        } while (next_tuple(pair_pick, pair_count));
        ++subset_rank;
    } while (next_subset(subset, r));

    return plan;
}

SchemeParams scheme_params(int q, int m, int z) {
    if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
    if (z < 2 || z > m) {
        fail(Errc::invalid_params, "z must satisfy 2 <= z <= m, got z = " + std::to_string(z) +
                                       " with m = " + std::to_string(m));
    }
    SchemeParams out;
    const BigInt choose = binomial(static_cast<unsigned>(m), static_cast<unsigned>(z));
    out.K = ipow(BigInt(q), static_cast<unsigned>(z)) * choose;
    out.M_over_N = Rational(1, q);
    out.F = ipow(BigInt(q), static_cast<unsigned>(m));
    out.R = Rational(choose) * rational_pow(Rational(q - 1, 2), static_cast<unsigned>(z));
    out.R_per_K = rational_pow(Rational(q - 1, 2 * q), static_cast<unsigned>(z));
    out.gain = ipow(BigInt(2), static_cast<unsigned>(z));
    return out;
}

} // namespace crdcache
