#ifndef CRDCACHE_REFERENCE_DESIGNS_HPP
#define CRDCACHE_REFERENCE_DESIGNS_HPP

#include <vector>

// Hand-checked reference designs, written out longhand and frozen here as
// test oracles. The digit-pattern entries list, for each (q, m, t), the
// expected parallel classes as sets of point sets; tests compare against
// library output order-insensitively. The hand-entered designs below them
// exercise the validators and the cross-intersection profiler on inputs
// that were worked out on paper, independent of the construction code.

namespace reference_designs {

using Blocks = std::vector<std::vector<int>>;       // blocks as point sets
using Classes = std::vector<Blocks>;                // one Blocks per class

struct DigitPatternReference {
    int q, m, t;
    Classes classes;
};

inline const std::vector<DigitPatternReference>& digit_pattern_table() {
    static const std::vector<DigitPatternReference> table = {
        {2, 3, 1,
         {{{0, 1, 2, 3}, {4, 5, 6, 7}},
          {{0, 2, 4, 6}, {1, 3, 5, 7}},
          {{0, 1, 4, 5}, {2, 3, 6, 7}}}},
        {2, 3, 2,
         {{{0, 1}, {2, 3}, {4, 5}, {6, 7}},
          {{0, 2}, {1, 3}, {4, 6}, {5, 7}},
          {{0, 4}, {1, 5}, {2, 6}, {3, 7}}}},
        {2, 4, 1,
         {{{0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}},
          {{0, 1, 2, 3, 8, 9, 10, 11}, {4, 5, 6, 7, 12, 13, 14, 15}},
          {{0, 2, 4, 6, 8, 10, 12, 14}, {1, 3, 5, 7, 9, 11, 13, 15}},
          {{0, 1, 4, 5, 8, 9, 12, 13}, {2, 3, 6, 7, 10, 11, 14, 15}}}},
        {2, 4, 2,
         {{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}},
          {{0, 1, 4, 5}, {2, 3, 6, 7}, {8, 9, 12, 13}, {10, 11, 14, 15}},
          {{0, 2, 4, 6}, {1, 3, 5, 7}, {8, 10, 12, 14}, {9, 11, 13, 15}},
          {{0, 1, 8, 9}, {2, 3, 10, 11}, {4, 5, 12, 13}, {6, 7, 14, 15}},
          {{0, 2, 8, 10}, {1, 3, 9, 11}, {4, 6, 12, 14}, {5, 7, 13, 15}},
          {{0, 4, 8, 12}, {1, 5, 9, 13}, {2, 6, 10, 14}, {3, 7, 11, 15}}}},
        {2, 4, 3,
         {{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}, {12, 13}, {14, 15}},
          {{0, 2}, {1, 3}, {4, 6}, {5, 7}, {8, 10}, {9, 11}, {12, 14}, {13, 15}},
          {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {8, 12}, {9, 13}, {10, 14}, {11, 15}},
          {{0, 8}, {1, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}}}},
        {3, 2, 1,
         {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
          {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}}},
        {4, 2, 1,
         {{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}},
          {{0, 4, 8, 12}, {1, 5, 9, 13}, {2, 6, 10, 14}, {3, 7, 11, 15}}}},
    };
    return table;
}

// A hand-entered design: v, the raw block list, and the parallel classes
// as index lists into that block list.
struct HandDesign {
    int v;
    Blocks blocks;
    std::vector<std::vector<int>> class_indices;
};

// All six 2-subsets of a 4-point set; three ways to split them into
// parallel classes; every two blocks from different classes share exactly
// one point, while triples from three classes do not meet consistently.
inline const HandDesign& pair_design() {
    static const HandDesign d = {
        4,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
        {{0, 5}, {1, 4}, {2, 3}},
    };
    return d;
}

// Resolvable into two classes, but the cross intersection sizes are 1 or
// 2 depending on the choice of blocks: no common value exists.
inline const HandDesign& uneven_design() {
    static const HandDesign d = {
        6,
        {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}, {1, 2, 5}},
        {{0, 1}, {2, 3}},
    };
    return d;
}

// 3 x 3 grid: rows and columns. Two classes, every cross pair meets in
// exactly one point, and 9 = 3^2.
inline const HandDesign& grid_design() {
    static const HandDesign d = {
        9,
        {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
        {{0, 1, 2}, {3, 4, 5}},
    };
    return d;
}

// Three halvings of an 8-point set: pairs from two classes meet in 2
// points, triples from all three classes in exactly 1, and 8 = 2^3.
inline const HandDesign& halving_design() {
    static const HandDesign d = {
        8,
        {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}},
        {{0, 1}, {2, 3}, {4, 5}},
    };
    return d;
}

// First two classes of the halving design only: still a maximal profile
// (mu_2 exists, r = 2) but with mu_r = 2, not 1.
inline const HandDesign& double_overlap_design() {
    static const HandDesign d = {
        8,
        {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}},
        {{0, 1}, {2, 3}},
    };
    return d;
}

} // namespace reference_designs

#endif
