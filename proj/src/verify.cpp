#include "crdcache/verify.hpp"

#include <algorithm>
#include <set>

#include "crdcache/random.hpp"

namespace crdcache {

namespace {

// Points of the user's z blocks (its cache view), as a membership mask.
std::vector<char> union_mask(const Placement& placement, const Topology& topo, int user) {
    std::vector<char> mask(static_cast<std::size_t>(placement.v), 0);
    for (int block : topo.user_blocks(user)) {
        for (int p : placement.cache_points[static_cast<std::size_t>(block)]) {
            mask[static_cast<std::size_t>(p)] = 1;
        }
    }
    return mask;
}

// Fixpoint single-unknown cancellation over the subfile grid of one user.
// known is indexed file*v + point.
void run_fixpoint(const TransmissionPlan& plan, int v, int N, std::vector<char>& known) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Transmission& tx : plan.transmissions) {
            int unknown_count = 0;
            std::size_t unknown_slot = 0;
            for (const Term& term : tx.terms) {
                if (term.file < 0 || term.file >= N || term.point < 0 || term.point >= v) {
                    unknown_count = 2; // malformed term: nothing learnable
                    break;
                }
                const std::size_t slot =
                    static_cast<std::size_t>(term.file) * static_cast<std::size_t>(v) +
                    static_cast<std::size_t>(term.point);
                if (!known[slot]) {
                    ++unknown_count;
                    if (unknown_count > 1) break;
                    unknown_slot = slot;
                }
            }
            if (unknown_count == 1) {
                known[unknown_slot] = 1;
                changed = true;
            }
        }
    }
}

} // namespace

std::vector<int> decode_user(const TransmissionPlan& plan, const Placement& placement,
                             const Topology& topo, int user, const DemandVector& demands) {
    const int v = placement.v;
    const int N = placement.N;
    const std::vector<char> cached = union_mask(placement, topo, user);

    std::vector<char> known(static_cast<std::size_t>(N) * static_cast<std::size_t>(v), 0);
    for (int n = 0; n < N; ++n) {
        for (int p = 0; p < v; ++p) {
            if (cached[static_cast<std::size_t>(p)]) {
                known[static_cast<std::size_t>(n) * static_cast<std::size_t>(v) +
                      static_cast<std::size_t>(p)] = 1;
            }
        }
    }
    run_fixpoint(plan, v, N, known);

    const int wanted = demands.demand[static_cast<std::size_t>(user)];
    std::vector<int> recovered;
    for (int p = 0; p < v; ++p) {
        if (known[static_cast<std::size_t>(wanted) * static_cast<std::size_t>(v) +
                  static_cast<std::size_t>(p)]) {
            recovered.push_back(p);
        }
    }
    return recovered;
}

DecodeReport verify_plan(const TransmissionPlan& plan, const Placement& placement,
                         const Topology& topo, const DemandVector& demands) {
    const int v = placement.v;
    const int K = topo.K();
    DecodeReport report;
    report.per_user.resize(static_cast<std::size_t>(K));
    report.benefited.assign(plan.transmissions.size(), 0);
    report.all_decodable = true;
    report.one_shot = true;

    std::vector<std::vector<char>> masks;
    masks.reserve(static_cast<std::size_t>(K));
    for (int u = 0; u < K; ++u) masks.push_back(union_mask(placement, topo, u));

    for (int u = 0; u < K; ++u) {
        const std::vector<char>& cached = masks[static_cast<std::size_t>(u)];
        UserDecode& ud = report.per_user[static_cast<std::size_t>(u)];
        ud.cached = static_cast<int>(std::count(cached.begin(), cached.end(), 1));

        const std::vector<int> recovered = decode_user(plan, placement, topo, u, demands);
        ud.delivered = static_cast<int>(recovered.size()) - ud.cached;
        ud.recovered = static_cast<int>(recovered.size()) == v;
        if (!ud.recovered) {
            report.all_decodable = false;
            report.failures.push_back(u);
        }

        // One-shot: each missing point of the demanded file must appear in
        // at most one transmission term carrying it toward this user.
        std::vector<int> cover(static_cast<std::size_t>(v), 0);
        const int wanted = demands.demand[static_cast<std::size_t>(u)];
        for (const Transmission& tx : plan.transmissions) {
            for (const Term& term : tx.terms) {
                if (term.file == wanted && term.point >= 0 && term.point < v &&
                    !cached[static_cast<std::size_t>(term.point)]) {
                    if (++cover[static_cast<std::size_t>(term.point)] > 1) report.one_shot = false;
                }
            }
        }
    }

    // A transmission benefits the users it addresses: term (u, f, p) with
    // f = demand(u) and p missing from u's cache delivers a needed subfile.
    for (std::size_t t = 0; t < plan.transmissions.size(); ++t) {
        std::set<int> users;
        for (const Term& term : plan.transmissions[t].terms) {
            if (term.user < 0 || term.user >= K) continue;
            if (term.file != demands.demand[static_cast<std::size_t>(term.user)]) continue;
            if (term.point < 0 || term.point >= v) continue;
            if (masks[static_cast<std::size_t>(term.user)][static_cast<std::size_t>(term.point)]) {
                continue;
            }
            users.insert(term.user);
        }
        report.benefited[t] = static_cast<int>(users.size());
        ++report.gain_histogram[report.benefited[t]];
    }

    return report;
}

bool payload_trial(const TransmissionPlan& plan, const Placement& placement,
                   const Topology& topo, const DemandVector& demands, std::uint64_t seed) {
    const int v = placement.v;
    const int N = placement.N;
    const int K = topo.K();

    // Broadcast values: XOR of the true payloads of each transmission's terms.
    std::vector<std::uint64_t> broadcast(plan.transmissions.size(), 0);
    for (std::size_t t = 0; t < plan.transmissions.size(); ++t) {
        for (const Term& term : plan.transmissions[t].terms) {
            broadcast[t] ^= subfile_payload(seed, term.file, term.point);
        }
    }

    for (int u = 0; u < K; ++u) {
        // The user's store of subfile values, filled from its caches.
        std::vector<char> have(static_cast<std::size_t>(N) * static_cast<std::size_t>(v), 0);
        std::vector<std::uint64_t> value(have.size(), 0);
        for (int block : topo.user_blocks(u)) {
            for (int p : placement.cache_points[static_cast<std::size_t>(block)]) {
                for (int n = 0; n < N; ++n) {
                    const std::size_t slot =
                        static_cast<std::size_t>(n) * static_cast<std::size_t>(v) +
                        static_cast<std::size_t>(p);
                    have[slot] = 1;
                    value[slot] = subfile_payload(seed, n, p);
                }
            }
        }

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < plan.transmissions.size(); ++t) {
                int unknown_count = 0;
                std::size_t unknown_slot = 0;
                std::uint64_t acc = broadcast[t];
                bool malformed = false;
                for (const Term& term : plan.transmissions[t].terms) {
                    if (term.file < 0 || term.file >= N || term.point < 0 || term.point >= v) {
                        malformed = true;
                        break;
                    }
                    const std::size_t slot =
                        static_cast<std::size_t>(term.file) * static_cast<std::size_t>(v) +
                        static_cast<std::size_t>(term.point);
                    if (have[slot]) {
                        acc ^= value[slot];
                    } else {
                        ++unknown_count;
                        unknown_slot = slot;
                    }
                }
                if (!malformed && unknown_count == 1) {
                    have[unknown_slot] = 1;
                    value[unknown_slot] = acc;
                    changed = true;
                }
            }
        }

        const int wanted = demands.demand[static_cast<std::size_t>(u)];
        for (int p = 0; p < v; ++p) {
            const std::size_t slot = static_cast<std::size_t>(wanted) * static_cast<std::size_t>(v) +
                                     static_cast<std::size_t>(p);
            if (!have[slot] || value[slot] != subfile_payload(seed, wanted, p)) return false;
        }
    }
    return true;
}

} // namespace crdcache
