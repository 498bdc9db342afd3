#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "crdcache/construct.hpp"
#include "crdcache/verify.hpp"
#include "reference_designs.hpp"
#include "test_support.hpp"

using namespace crdcache;

namespace {

struct Scenario {
    Topology topo;
    Placement placement;
    DemandVector demands;
    TransmissionPlan plan;
};

Scenario make_scenario(const Resolution& res, int z) {
    Scenario s{build_topology(res, z), {}, {}, {}};
    std::vector<int> demand(static_cast<std::size_t>(s.topo.K()));
    std::iota(demand.begin(), demand.end(), 0);
    s.demands = make_demands(s.topo, demand, s.topo.K());
    s.placement = place(s.topo, s.demands.N);
    s.plan = generate_plan(s.topo, s.demands);
    return s;
}

Resolution load(const reference_designs::HandDesign& hd) {
    return validate_resolution(validate_design(hd.v, hd.blocks), hd.class_indices);
}

} // namespace

TEST_CASE("full decode on the 8-point scheme at access degree 2") {
    const Scenario s = make_scenario(construct({2, 3, 1}), 2);
    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);

    CHECK(report.all_decodable);
    CHECK(report.one_shot);
    CHECK(report.failures.empty());
    REQUIRE(report.per_user.size() == 12);
    for (const UserDecode& ud : report.per_user) {
        CHECK(ud.cached == 6);
        CHECK(ud.delivered == 2);
        CHECK(ud.recovered);
    }
    CHECK(report.benefited == std::vector<int>(6, 4));
    CHECK(report.gain_histogram == std::map<int, int>{{4, 6}});

    std::vector<int> everything(8);
    std::iota(everything.begin(), everything.end(), 0);
    for (int u = 0; u < 12; ++u) {
        CHECK(decode_user(s.plan, s.placement, s.topo, u, s.demands) == everything);
    }
}

TEST_CASE("full decode at access degree 3: one transmission serves everyone") {
    const Scenario s = make_scenario(construct({2, 3, 1}), 3);
    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
    CHECK(report.all_decodable);
    CHECK(report.one_shot);
    CHECK(report.gain_histogram == std::map<int, int>{{8, 1}});
    for (const UserDecode& ud : report.per_user) {
        CHECK(ud.cached == 7);
        CHECK(ud.delivered == 1);
    }
}

TEST_CASE("delivered subfiles complement the cache exactly") {
    for (int q : {2, 3}) {
        for (int z = 2; z <= 3; ++z) {
            const int m = 3;
            const Scenario s = make_scenario(construct({q, m, 1}), z);
            const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
            CHECK(report.all_decodable);
            for (int u = 0; u < s.topo.K(); ++u) {
                const auto& ud = report.per_user[static_cast<std::size_t>(u)];
                const Rational eff =
                    effective_fraction(s.topo, s.topo.users[static_cast<std::size_t>(u)]);
                CHECK(Rational(ud.cached, s.topo.v()) == eff);
                CHECK(ud.cached + ud.delivered == s.topo.v());
            }
        }
    }
}

TEST_CASE("dropping a transmission breaks exactly its users") {
    Scenario s = make_scenario(construct({2, 3, 1}), 2);
    const Transmission dropped = s.plan.transmissions.back();
    s.plan.transmissions.pop_back();

    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
    CHECK_FALSE(report.all_decodable);
    CHECK(report.one_shot); // nothing is delivered twice, just not at all
    std::vector<int> expected_failures;
    for (const Term& term : dropped.terms) expected_failures.push_back(term.user);
    std::sort(expected_failures.begin(), expected_failures.end());
    CHECK(report.failures == expected_failures);
}

TEST_CASE("a duplicated delivery clears one_shot") {
    Scenario s = make_scenario(construct({2, 3, 1}), 2);
    // Slot 2 of the first pair choice re-delivers what slot 1 delivered.
    s.plan.transmissions[1].terms[0].point = s.plan.transmissions[0].terms[0].point;
    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
    CHECK_FALSE(report.one_shot);
    CHECK_FALSE(report.all_decodable); // user 0 now misses one subfile
    CHECK(std::find(report.failures.begin(), report.failures.end(), 0) != report.failures.end());
}

TEST_CASE("a mislabeled term file starves its user") {
    Scenario s = make_scenario(construct({2, 3, 1}), 2);
    s.plan.transmissions[0].terms[0].file = s.demands.demand[1];
    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
    CHECK_FALSE(report.all_decodable);
    CHECK(std::find(report.failures.begin(), report.failures.end(), 0) != report.failures.end());
    // The corrupted term no longer addresses user 0.
    CHECK(report.benefited[0] == 3);
}

TEST_CASE("a term pointing at cached data helps nobody") {
    Scenario s = make_scenario(construct({2, 3, 1}), 2);
    s.plan.transmissions[0].terms[0].point = 0; // user 0 already caches point 0
    const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
    CHECK_FALSE(report.all_decodable);
    // User 0 gains nothing from its own term, and user 3 can no longer
    // cancel that term (it does not cache the redirected point), so the
    // transmission is dead weight for both.
    CHECK(report.failures == std::vector<int>{0, 3});
    CHECK(report.benefited[0] == 3);
}

TEST_CASE("the empty plan leaves every user stranded") {
    const Topology topo = build_topology(construct({2, 3, 1}), 2);
    std::vector<int> demand(12);
    std::iota(demand.begin(), demand.end(), 0);
    const DemandVector demands = make_demands(topo, demand, 12);
    const Placement placement = place(topo, 12);
    const TransmissionPlan empty{8, {}};

    const DecodeReport report = verify_plan(empty, placement, topo, demands);
    CHECK_FALSE(report.all_decodable);
    CHECK(report.one_shot);
    CHECK(report.failures.size() == 12);
    CHECK(report.gain_histogram.empty());

    // decode_user falls back to the cached points alone.
    CHECK(decode_user(empty, placement, topo, 0, demands) == std::vector<int>{0, 1, 2, 4, 5, 6});
}

TEST_CASE("repeated demands stay decodable; one_shot degrades as expected") {
    const Topology topo = build_topology(construct({2, 3, 1}), 2);
    const DemandVector demands = make_demands(topo, std::vector<int>(12, 0), 1);
    const Placement placement = place(topo, 1);
    const TransmissionPlan plan = generate_plan(topo, demands);

    const DecodeReport report = verify_plan(plan, placement, topo, demands);
    CHECK(report.all_decodable);
    // With one shared file, the same subfile reaches a user through
    // several transmissions, so delivery is no longer one-shot.
    CHECK_FALSE(report.one_shot);
    CHECK(report.gain_histogram == std::map<int, int>{{4, 6}});
    CHECK(payload_trial(plan, placement, topo, demands, 7));
}

TEST_CASE("more files than users") {
    const Topology topo = build_topology(construct({2, 3, 1}), 2);
    std::vector<int> demand(12);
    std::iota(demand.begin(), demand.end(), 3); // files 3..14 of 15
    const DemandVector demands = make_demands(topo, demand, 15);
    const Placement placement = place(topo, 15);
    const TransmissionPlan plan = generate_plan(topo, demands);
    const DecodeReport report = verify_plan(plan, placement, topo, demands);
    CHECK(report.all_decodable);
    CHECK(report.one_shot);
    CHECK(payload_trial(plan, placement, topo, demands, 99));
}

TEST_CASE("hand-entered designs run the full pipeline") {
    // Pairs on 4 points: 12 users, 3 transmissions, 1 missing point each.
    {
        const Scenario s = make_scenario(load(reference_designs::pair_design()), 2);
        CHECK(s.topo.K() == 12);
        CHECK(s.plan.transmissions.size() == 3);
        CHECK(s.plan.rate() == Rational(3, 4));
        const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
        CHECK(report.all_decodable);
        CHECK(report.one_shot);
        CHECK(report.gain_histogram == std::map<int, int>{{4, 3}});
        CHECK(payload_trial(s.plan, s.placement, s.topo, s.demands, 11));
    }
    // 3 x 3 grid: 9 users, rate 1.
    {
        const Scenario s = make_scenario(load(reference_designs::grid_design()), 2);
        CHECK(s.topo.K() == 9);
        CHECK(s.plan.transmissions.size() == 9);
        CHECK(s.plan.rate() == Rational(1));
        const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
        CHECK(report.all_decodable);
        CHECK(report.one_shot);
        CHECK(payload_trial(s.plan, s.placement, s.topo, s.demands, 12));
    }
    // Halvings of 8 points at both access degrees.
    for (int z : {2, 3}) {
        const Scenario s = make_scenario(load(reference_designs::halving_design()), z);
        CHECK(s.topo.K() == (z == 2 ? 12 : 8));
        const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
        CHECK(report.all_decodable);
        CHECK(report.one_shot);
        CHECK(payload_trial(s.plan, s.placement, s.topo, s.demands, 13));
    }
}

TEST_CASE("payload trial agrees with symbolic verification") {
    const std::vector<std::uint64_t> seeds = {1, 42, 12345};

    Scenario good = make_scenario(construct({2, 3, 1}), 2);
    for (std::uint64_t seed : seeds) {
        CHECK(payload_trial(good.plan, good.placement, good.topo, good.demands, seed));
    }

    Scenario broken = make_scenario(construct({2, 3, 1}), 2);
    broken.plan.transmissions.pop_back();
    for (std::uint64_t seed : seeds) {
        const bool symbolic =
            verify_plan(broken.plan, broken.placement, broken.topo, broken.demands).all_decodable;
        const bool bits =
            payload_trial(broken.plan, broken.placement, broken.topo, broken.demands, seed);
        CHECK_FALSE(bits);
        CHECK(bits == symbolic);
    }

    Scenario swapped = make_scenario(construct({2, 3, 1}), 2);
    swapped.plan.transmissions[0].terms[0].point = 0;
    CHECK_FALSE(
        payload_trial(swapped.plan, swapped.placement, swapped.topo, swapped.demands, 5));
}

TEST_CASE("verification grid across alphabets and access degrees") {
    for (int q : {2, 3}) {
        for (int m : {2, 3}) {
            const Resolution res = construct({q, m, 1});
            for (int z = 2; z <= m; ++z) {
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(z);
                const Scenario s = make_scenario(res, z);
                const DecodeReport report = verify_plan(s.plan, s.placement, s.topo, s.demands);
                CHECK(report.all_decodable);
                CHECK(report.one_shot);
                // Every transmission benefits exactly 2^z users.
                CHECK(report.gain_histogram ==
                      std::map<int, int>{{1 << z, static_cast<int>(s.plan.transmissions.size())}});
                CHECK(payload_trial(s.plan, s.placement, s.topo, s.demands, 2026));
            }
        }
    }
}
