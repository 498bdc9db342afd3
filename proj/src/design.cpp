#include "crdcache/design.hpp"

#include <algorithm>
#include <string>

#include "crdcache/rational.hpp"

namespace crdcache {

Design validate_design(int v, const std::vector<std::vector<int>>& raw_blocks) {
    if (v < 1) fail(Errc::invalid_params, "point count must be >= 1, got " + std::to_string(v));
    if (raw_blocks.empty()) fail(Errc::invalid_params, "a design needs at least one block");

    Design design;
    design.v = v;
    design.blocks.reserve(raw_blocks.size());
    const std::size_t k = raw_blocks.front().size();

    for (std::size_t idx = 0; idx < raw_blocks.size(); ++idx) {
        Block block = raw_blocks[idx];
        const std::string where = "block " + std::to_string(idx);
        if (block.empty()) fail(Errc::empty_block, where + " is empty");
        if (block.size() != k) {
            fail(Errc::non_uniform_block_size,
                 where + " has size " + std::to_string(block.size()) + ", expected " +
                     std::to_string(k));
        }
        std::sort(block.begin(), block.end());
        for (std::size_t p = 0; p < block.size(); ++p) {
            if (block[p] < 0 || block[p] >= v) {
                fail(Errc::point_out_of_range,
                     where + " contains point " + std::to_string(block[p]) +
                         " outside [0, " + std::to_string(v) + ")");
            }
            if (p > 0 && block[p] == block[p - 1]) {
                fail(Errc::duplicate_point_in_block,
                     where + " repeats point " + std::to_string(block[p]));
            }
        }
        design.blocks.push_back(std::move(block));
    }
    design.k = static_cast<int>(k);
    return design;
}

Resolution validate_resolution(Design design, std::vector<std::vector<int>> classes) {
    const int b = design.b();
    std::vector<char> used(static_cast<std::size_t>(b), 0);
    int total = 0;
    for (const auto& cls : classes) {
        for (int idx : cls) {
            if (idx < 0 || idx >= b) {
                fail(Errc::not_a_partition,
                     "block index " + std::to_string(idx) + " outside [0, " + std::to_string(b) +
                         ")");
            }
            if (used[static_cast<std::size_t>(idx)]) {
                fail(Errc::not_a_partition, "block index " + std::to_string(idx) + " appears twice");
            }
            used[static_cast<std::size_t>(idx)] = 1;
            ++total;
        }
    }
    if (total != b) {
        fail(Errc::not_a_partition, "classes cover " + std::to_string(total) + " of " +
                                        std::to_string(b) + " blocks");
    }

    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<char> seen(static_cast<std::size_t>(design.v), 0);
        int covered = 0;
        for (int idx : classes[c]) {
            for (int p : design.blocks[static_cast<std::size_t>(idx)]) {
                if (seen[static_cast<std::size_t>(p)]) {
                    fail(Errc::class_not_disjoint, "class " + std::to_string(c) +
                                                       " has point " + std::to_string(p) +
                                                       " in two blocks");
                }
                seen[static_cast<std::size_t>(p)] = 1;
                ++covered;
            }
        }
        if (covered != design.v) {
            fail(Errc::class_does_not_cover, "class " + std::to_string(c) + " covers " +
                                                 std::to_string(covered) + " of " +
                                                 std::to_string(design.v) + " points");
        }
        std::sort(classes[c].begin(), classes[c].end());
    }

    Resolution res;
    res.design = std::move(design);
    res.classes = std::move(classes);
    return res;
}

namespace {

// Depth-first exact-cover search. Each new class is seeded with the
// smallest unused block index (any resolution must place it somewhere,
// and ordering classes by leading index is the canonical form), then
// extended with ascending disjoint block indices. Trying candidates in
// ascending order makes the first solution the lexicographically
// smallest one.
struct ResolutionSearch {
    const Design& design;
    int b_r;
    std::vector<char> used;
    std::vector<char> covered;
    std::vector<std::vector<int>> classes;
    std::vector<int> current;
    int covered_count = 0;
    int used_count = 0;

    explicit ResolutionSearch(const Design& d)
        : design(d), b_r(d.v / d.k), used(static_cast<std::size_t>(d.b()), 0),
          covered(static_cast<std::size_t>(d.v), 0) {}

    bool block_fits(int idx) const {
        for (int p : design.blocks[static_cast<std::size_t>(idx)]) {
            if (covered[static_cast<std::size_t>(p)]) return false;
        }
        return true;
    }

    void take(int idx, int delta) {
        used[static_cast<std::size_t>(idx)] = delta > 0;
        used_count += delta;
        covered_count += delta * design.k;
        for (int p : design.blocks[static_cast<std::size_t>(idx)]) {
            covered[static_cast<std::size_t>(p)] = delta > 0;
        }
    }

    bool solve() {
        if (current.empty()) {
            if (used_count == design.b()) return true; // every block placed
            // Seed the class with the smallest unused block.
            int seed = 0;
            while (used[static_cast<std::size_t>(seed)]) ++seed;
            take(seed, +1);
            current.push_back(seed);
            if (extend()) return true;
            current.pop_back();
            take(seed, -1);
            return false;
        }
        return extend();
    }

    bool extend() {
        if (covered_count == design.v) {
            // Class complete (it covers every point); start the next one
            // from a clean cover map and restore on backtrack.
            classes.push_back(current);
            current.clear();
            std::fill(covered.begin(), covered.end(), 0);
            covered_count = 0;
            if (solve()) return true;
            std::fill(covered.begin(), covered.end(), 1);
            covered_count = design.v;
            current = classes.back();
            classes.pop_back();
            return false;
        }
        if (static_cast<int>(current.size()) == b_r) return false;
        for (int idx = current.back() + 1; idx < design.b(); ++idx) {
            if (used[static_cast<std::size_t>(idx)] || !block_fits(idx)) continue;
            take(idx, +1);
            current.push_back(idx);
            if (extend()) return true;
            current.pop_back();
            take(idx, -1);
        }
        return false;
    }
};

} // namespace

std::optional<Resolution> find_resolution(const Design& design) {
    if (design.v % design.k != 0) return std::nullopt;
    const int b_r = design.v / design.k;
    if (design.b() % b_r != 0) return std::nullopt;

    ResolutionSearch search(design);
    if (!search.solve()) return std::nullopt;
    return validate_resolution(design, std::move(search.classes));
}

Block intersect_blocks(const std::vector<const Block*>& blocks) {
    if (blocks.empty()) return {};
    Block acc = *blocks.front();
    for (std::size_t i = 1; i < blocks.size() && !acc.empty(); ++i) {
        Block next;
        next.reserve(acc.size());
        std::set_intersection(acc.begin(), acc.end(), blocks[i]->begin(), blocks[i]->end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

namespace {

// Calls fn(intersection_size) for every choice of i blocks from i
// distinct classes; fn returns false to stop early.
template <typename Fn>
void for_each_cross_intersection(const Resolution& res, int i, Fn&& fn) {
    const int r = res.r();
    std::vector<int> class_pick(static_cast<std::size_t>(i));
    for (int c = 0; c < i; ++c) class_pick[static_cast<std::size_t>(c)] = c;

    auto run_blocks = [&]() {
        const int b_r = res.blocks_per_class();
        std::vector<int> pos(static_cast<std::size_t>(i), 0);
        for (;;) {
            std::vector<const Block*> chosen;
            chosen.reserve(static_cast<std::size_t>(i));
            for (int c = 0; c < i; ++c) {
                const auto& cls = res.classes[static_cast<std::size_t>(class_pick[static_cast<std::size_t>(c)])];
                chosen.push_back(&res.design.blocks[static_cast<std::size_t>(
                    cls[static_cast<std::size_t>(pos[static_cast<std::size_t>(c)])])]);
            }
            if (!fn(static_cast<int>(intersect_blocks(chosen).size()))) return false;
            int c = i - 1;
            while (c >= 0 && pos[static_cast<std::size_t>(c)] == b_r - 1) {
                pos[static_cast<std::size_t>(c)] = 0;
                --c;
            }
            if (c < 0) break;
            ++pos[static_cast<std::size_t>(c)];
        }
        return true;
    };

    // Iterate size-i class subsets in lexicographic order.
    for (;;) {
        if (!run_blocks()) return;
        int c = i - 1;
        while (c >= 0 && class_pick[static_cast<std::size_t>(c)] == r - i + c) --c;
        if (c < 0) break;
        ++class_pick[static_cast<std::size_t>(c)];
        for (int d = c + 1; d < i; ++d) {
            class_pick[static_cast<std::size_t>(d)] = class_pick[static_cast<std::size_t>(d - 1)] + 1;
        }
    }
}

} // namespace

std::optional<int> cross_intersection_number(const Resolution& res, int i) {
    if (i < 2 || i > res.r()) {
        fail(Errc::index_out_of_range, "cross intersection index " + std::to_string(i) +
                                           " outside [2, " + std::to_string(res.r()) + "]");
    }
    std::optional<int> common;
    bool consistent = true;
    for_each_cross_intersection(res, i, [&](int size) {
        if (size == 0 || (common && *common != size)) {
            consistent = false;
            return false;
        }
        common = size;
        return true;
    });
    if (!consistent) return std::nullopt;
    return common;
}

CrdProfile crd_profile(const Resolution& res) {
    CrdProfile profile;
    for (int i = 2; i <= res.r(); ++i) {
        if (auto mu = cross_intersection_number(res, i)) profile.mu[i] = *mu;
    }
    profile.is_crd = !profile.mu.empty();
    profile.is_maximal = profile.mu.count(res.r()) > 0;
    return profile;
}

MaximalPointCountCheck check_maximal_point_count(const Resolution& res) {
    MaximalPointCountCheck check;
    const CrdProfile profile = crd_profile(res);
    const auto it = profile.mu.find(res.r());
    check.applicable = profile.is_maximal && it != profile.mu.end() && it->second == 1;
    if (check.applicable) {
        check.holds =
            ipow(BigInt(res.blocks_per_class()), static_cast<unsigned>(res.r())) == res.design.v;
    }
    return check;
}

} // namespace crdcache
