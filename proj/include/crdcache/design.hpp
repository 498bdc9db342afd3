#ifndef CRDCACHE_DESIGN_HPP
#define CRDCACHE_DESIGN_HPP

#include <map>
#include <optional>
#include <vector>

#include "crdcache/errors.hpp"

namespace crdcache {

// Finite uniform block designs. A design is a point set {0,...,v-1}
// together with b blocks of a common size k. A resolution partitions the
// block list into parallel classes: sets of disjoint blocks whose union is
// the whole point set. All objects are immutable after construction and
// every operation here is a pure function, so shared instances are safe to
// use from multiple threads.

using Point = int;
using Block = std::vector<Point>; // strictly ascending, non-empty

struct Design {
    int v = 0;                 // number of points
    std::vector<Block> blocks; // uniform size k, canonical (sorted) form
    int k = 0;                 // common block size

    int b() const { return static_cast<int>(blocks.size()); }
};

struct Resolution {
    Design design;
    // Block indices per parallel class; indices ascending within a class.
    std::vector<std::vector<int>> classes;

    int r() const { return static_cast<int>(classes.size()); }
    int blocks_per_class() const { return design.b() / r(); } // b_r = v/k
};

// Cross intersection numbers of a resolution: mu[i] is the common size of
// the intersection of any i blocks drawn from i distinct parallel classes,
// recorded only when that size is constant and nonzero over all choices.
// The design is cross resolvable (CRD) when some mu_i exists, and maximal
// when mu_r exists.
struct CrdProfile {
    std::map<int, int> mu;
    bool is_crd = false;
    bool is_maximal = false;
};

struct MaximalPointCountCheck {
    bool applicable = false; // profile is maximal with mu_r = 1
    bool holds = false;      // v == b_r^r
};

// Canonicalizes and checks a raw block list: points sorted within each
// block, block order preserved. Throws Error with one of
// non_uniform_block_size, empty_block, point_out_of_range,
// duplicate_point_in_block.
Design validate_design(int v, const std::vector<std::vector<int>>& raw_blocks);

// Checks that `classes` is a resolution of `design`: the index lists
// partition {0,...,b-1}, blocks within a class are pairwise disjoint, and
// each class covers the full point set. Throws not_a_partition,
// class_not_disjoint or class_does_not_cover.
Resolution validate_resolution(Design design, std::vector<std::vector<int>> classes);

// Exact-cover search for a resolution. Deterministic: among all
// resolutions, returns the one whose class list is lexicographically
// smallest under block-index ordering (classes sorted by leading index,
// indices ascending within a class). nullopt when none exists.
std::optional<Resolution> find_resolution(const Design& design);

// The i-th cross intersection number, or nullopt when the intersection
// size is not constant (or is zero) over all choices of i blocks from i
// distinct classes. Throws index_out_of_range unless 2 <= i <= r.
std::optional<int> cross_intersection_number(const Resolution& res, int i);

CrdProfile crd_profile(const Resolution& res);

// For maximal profiles with mu_r = 1, checks the point-count identity
// v = b_r^r; not applicable otherwise.
MaximalPointCountCheck check_maximal_point_count(const Resolution& res);

// Sorted intersection of already-sorted blocks.
Block intersect_blocks(const std::vector<const Block*>& blocks);

} // namespace crdcache

#endif
