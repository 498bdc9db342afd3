#ifndef CRDCACHE_SCHEME_HPP
#define CRDCACHE_SCHEME_HPP

#include <array>
#include <vector>

#include "crdcache/design.hpp"
#include "crdcache/rational.hpp"

namespace crdcache {

// Multi-access coded caching on a cross resolvable design. Each block of
// the design is a cache; a user is an unordered choice of z blocks drawn
// from z distinct parallel classes, giving K = C(r,z) * b_r^z users. Every
// file is split into v subfiles, one per point; cache j stores, for every
// file, the subfiles indexed by the points of block j (so M/N = k/v).
//
// Delivery: for every size-z class subset, every choice of one unordered
// block pair per chosen class, and every slot l in {1,...,mu_z}, one XOR
// transmission is sent. Its 2^z terms correspond to the block selections
// from the pairs; the term for user u carries subfile (demand(u), p) where
// p is the l-th smallest point of the intersection of the complementary
// (unselected) blocks. This yields exactly mu_z * C(b_r,2)^z * C(r,z)
// transmissions, each useful to 2^z users when demands are distinct.

struct SchemeUser {
    std::vector<int> class_subset; // z class indices, strictly ascending
    std::vector<int> choice;       // per chosen class: block position < b_r

    bool operator==(const SchemeUser&) const = default;
};

struct Topology {
    Resolution res;
    int z = 0;
    int mu_z = 0;
    std::vector<SchemeUser> users; // canonical order (see build_topology)

    int K() const { return static_cast<int>(users.size()); }
    int cache_count() const { return res.design.b(); }
    int v() const { return res.design.v; }
    // Global block indices of a user's z caches.
    std::vector<int> user_blocks(int u) const;
};

struct Placement {
    int N = 0; // file count
    int v = 0;
    int k = 0;
    // cache_points[j]: the points of block j; cache j holds, for every
    // file, the subfiles indexed by these points.
    std::vector<Block> cache_points;

    Rational memory_fraction() const { return Rational(k, v); }
};

struct DemandVector {
    std::vector<int> demand; // per user: file index in [0, N)
    int N = 0;
    bool distinct = false;
};

struct Term {
    int user = 0;
    int file = 0;
    int point = 0;

    bool operator==(const Term&) const = default;
};

struct Transmission {
    std::vector<int> classes;             // the class subset, ascending
    std::vector<std::array<int, 2>> pairs; // per class: global block pair, ascending
    int slot = 0;                          // l in {1,...,mu_z}
    std::vector<Term> terms;               // exactly 2^z entries
};

struct TransmissionPlan {
    int v = 0;
    std::vector<Transmission> transmissions;

    Rational rate() const { return Rational(static_cast<int>(transmissions.size()), v); }
};

// Enumerates the users of the z-access scheme in canonical order: class
// subsets in lexicographic order, then choice vectors read as base-b_r
// integers (leftmost class most significant). Throws z_out_of_range when
// z < 2 or z > r, access_degree_unsupported when mu_z does not exist.
Topology build_topology(const Resolution& res, int z);

// Uncoded placement: cache j holds the points of block j for each of the
// N files. Throws invalid_params when N < 1.
Placement place(const Topology& topo, int N);

// Fraction of distinct subfiles a user sees across its z caches:
// |union of the user's blocks| / v. Equals 1 - (1 - 1/q)^z on the
// digit-pattern designs with t = 1.
Rational effective_fraction(const Topology& topo, const SchemeUser& user);

// Builds a DemandVector, computing the distinctness flag. Throws
// demand_count_mismatch when |demand| != K, file_index_out_of_range when
// any entry is outside [0, N).
DemandVector make_demands(const Topology& topo, std::vector<int> demand, int N);

// The pair-and-complement XOR schedule described above. Transmissions are
// ordered by (class subset lex) x (pair combination lex, pairs per class
// in lex order) x (slot ascending). Non-distinct demands are accepted;
// the plan is generated as if demands were distinct.
TransmissionPlan generate_plan(const Topology& topo, const DemandVector& demands);

// Closed-form parameters of the z-access scheme on the q-ary t=1
// construction with m digit positions (2 <= z <= m):
//   K = q^z C(m,z), M/N = 1/q, F = q^m,
//   R = C(m,z) ((q-1)/2)^z, R/K = ((q-1)/(2q))^z, gain = 2^z.
struct SchemeParams {
    BigInt K;
    Rational M_over_N;
    BigInt F;
    Rational R;
    Rational R_per_K;
    BigInt gain;
};
SchemeParams scheme_params(int q, int m, int z); // throws invalid_params

} // namespace crdcache

#endif
