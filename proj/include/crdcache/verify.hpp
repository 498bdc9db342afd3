#ifndef CRDCACHE_VERIFY_HPP
#define CRDCACHE_VERIFY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "crdcache/scheme.hpp"

namespace crdcache {

// Brute-force decodability oracle for transmission plans. Decoding is
// iterate-to-fixpoint single-unknown cancellation: a user starts from its
// cached subfiles (every file, the points of its z blocks) and learns the
// subfile of any transmission in which exactly one term is still unknown.
// One pass suffices for plans produced by generate_plan, but the fixpoint
// loop keeps the oracle honest on corrupted plans.

struct UserDecode {
    int cached = 0;    // points of the demanded file held before delivery
    int delivered = 0; // points of the demanded file learned from the plan
    bool recovered = false; // cached + delivered covers all v points
};

struct DecodeReport {
    std::vector<UserDecode> per_user;
    std::vector<int> benefited; // per transmission: users it serves
    bool all_decodable = false;
    bool one_shot = false; // no (user, point) of a demand delivered twice
    std::map<int, int> gain_histogram; // benefited count -> #transmissions
    std::vector<int> failures;         // users with recovered == false
};

// Points of the demanded file the user ends up knowing (cached plus
// delivered), ascending.
std::vector<int> decode_user(const TransmissionPlan& plan, const Placement& placement,
                             const Topology& topo, int user, const DemandVector& demands);

// Runs decode_user for every user and aggregates. Failures are report
// fields, never exceptions.
DecodeReport verify_plan(const TransmissionPlan& plan, const Placement& placement,
                         const Topology& topo, const DemandVector& demands);

// Bit-level cross-check: instantiates every subfile as a pseudorandom
// 64-bit word derived from `seed`, materializes each transmission as the
// XOR of its terms, replays decoding with real XOR cancellation, and
// returns whether every user reproduces its demanded file bit-exactly.
// Agrees with verify_plan(...).all_decodable by construction.
bool payload_trial(const TransmissionPlan& plan, const Placement& placement,
                   const Topology& topo, const DemandVector& demands, std::uint64_t seed);

} // namespace crdcache

#endif
