#include <doctest.h>

#include <set>

#include "muxdeg/analysis.hpp"
#include "test_support.hpp"

using namespace muxdeg;
using namespace muxdeg::testing;

namespace {

// alpha: 1-2, 1-3; beta: 1-2 (again), 2-4
MultiplexNetwork two_layer()
{
    NetworkBuilder builder;
    const LayerId a = builder.add_layer("alpha");
    const LayerId b = builder.add_layer("beta");
    builder.add_edge(a, 1, 2, 2);
    builder.add_edge(a, 1, 3, 1);
    builder.add_edge(b, 1, 2, 5);
    builder.add_edge(b, 2, 4, 1);
    return builder.build();
}

} // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("approach1 flattens by edge-support union")
{
    const MultiplexNetwork net = two_layer();
    const DegreeVector aggregate = approach1_aggregate_degrees(net);
    // union edges: 1-2, 1-3, 2-4
    CHECK(aggregate.at(net.actor_index(1)) == 2);
    CHECK(aggregate.at(net.actor_index(2)) == 2);
    CHECK(aggregate.at(net.actor_index(3)) == 1);
    CHECK(aggregate.at(net.actor_index(4)) == 1);

    SUBCASE("disjoint layers: union degree equals the per-layer sum")
    {
        NetworkBuilder builder;
        const LayerId a = builder.add_layer("alpha");
        const LayerId b = builder.add_layer("beta");
        builder.add_edge(a, 1, 2);
        builder.add_edge(b, 1, 3);
        const MultiplexNetwork disjoint = builder.build();
        const DegreeVector agg = approach1_aggregate_degrees(disjoint);
        CHECK(agg.at(disjoint.actor_index(1)) == 2);
    }
}

TEST_CASE("approach2 yields one degree vector per layer over the full actor set")
{
    NetworkBuilder builder;
    const LayerId a = builder.add_layer("alpha");
    builder.add_layer("beta"); // stays empty
    builder.add_edge(a, 1, 2);
    const MultiplexNetwork net = builder.build();

    const auto per_layer = approach2_per_layer_degrees(net);
    REQUIRE(per_layer.size() == 2);
    CHECK(per_layer[0].first.name == "alpha");
    CHECK(per_layer[0].second.values == std::vector<std::int64_t>{1, 1});
    CHECK(per_layer[1].second.values == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("approach3 on a single layer matches approach2")
{
    NetworkBuilder builder;
    const LayerId a = builder.add_layer("alpha");
    builder.add_edge(a, 1, 2);
    builder.add_edge(a, 2, 3);
    const MultiplexNetwork net = builder.build();
    CHECK(approach3_multilayer_degrees(net).values ==
          approach2_per_layer_degrees(net)[0].second.values);
}

TEST_CASE("cross-approach inequality: union degree never exceeds the per-layer sum")
{
    Rng rng(71u);
    for (int instance = 0; instance < 50; ++instance) {
        const MultiplexNetwork net = random_network(rng);
        const DegreeVector aggregate = approach1_aggregate_degrees(net);
        const auto per_layer = approach2_per_layer_degrees(net);
        for (ActorId actor : net.actors()) {
            const std::size_t i = net.actor_index(actor);
            std::int64_t sum = 0;
            // equality must hold exactly when the neighbour sets are pairwise disjoint
            std::set<ActorId> seen;
            bool disjoint = true;
            for (std::size_t l = 0; l < net.layer_count(); ++l) {
                sum += per_layer[l].second.at(i);
                for (const auto& [neighbor, _] : net.neighbors(l, i)) {
                    if (!seen.insert(net.actors()[neighbor]).second) {
                        disjoint = false;
                    }
                }
            }
            CHECK(aggregate.at(i) <= sum);
            CHECK((aggregate.at(i) == sum) == disjoint);
        }
    }
}

TEST_CASE("rank_top_k")
{
    NetworkBuilder builder;
    const LayerId a = builder.add_layer("alpha");
    builder.add_edge(a, 1, 2);
    builder.add_edge(a, 1, 3);
    builder.add_edge(a, 1, 4);
    builder.add_edge(a, 2, 3);
    builder.add_actor(9);
    const MultiplexNetwork net = builder.build();
    const DegreeVector scores = approach2_per_layer_degrees(net)[0].second;

    SUBCASE("top-k by descending score")
    {
        const auto top = rank_top_k(net, scores, 2);
        REQUIRE(top.size() == 2);
        CHECK(top[0].rank == 1);
        CHECK(top[0].actor == 1);
        CHECK(top[0].score == 3);
        CHECK(top[1].actor == 2);
        CHECK_FALSE(top[0].role.has_value());
    }

    SUBCASE("k = N gives the full ordering, each actor once, zero scores included")
    {
        const auto all = rank_top_k(net, scores, net.actor_count());
        REQUIRE(all.size() == 5);
        std::set<ActorId> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].rank == i + 1);
            if (i > 0) {
                CHECK(all[i].score <= all[i - 1].score);
            }
            seen.insert(all[i].actor);
        }
        CHECK(seen.size() == 5);
        CHECK(all.back().actor == 9);
        CHECK(all.back().score == 0);
    }

    SUBCASE("ties break by ascending actor id")
    {
        const auto all = rank_top_k(net, scores, 5);
        // actors 2 and 3 both have score 2
        CHECK(all[1].actor == 2);
        CHECK(all[2].actor == 3);
    }

    SUBCASE("k past the actor count returns every actor")
    {
        CHECK(rank_top_k(net, scores, 100).size() == 5);
    }

    SUBCASE("k = 0 is rejected")
    {
        CHECK_THROWS_AS(rank_top_k(net, scores, 0), Error);
    }

    SUBCASE("roles are joined when provided")
    {
        RoleMap roles;
        roles.emplace(1, RoleRecord{1, "Caporegime", "Mistretta"});
        const auto top = rank_top_k(net, scores, 1, &roles);
        REQUIRE(top[0].role.has_value());
        CHECK(top[0].role->display() == "Caporegime Mistretta Family");
    }
}

TEST_CASE("comparison_table")
{
    const MultiplexNetwork net = two_layer();
    RoleMap roles;
    roles.emplace(1, RoleRecord{1, "Boss", ""});

    const DegreeTable table = comparison_table(net, &roles, 10);
    REQUIRE(table.rows.size() == 4);
    // layer columns are listed newest layer first
    REQUIRE(table.layer_order.size() == 2);
    CHECK(table.layer_order[0].name == "beta");
    CHECK(table.layer_order[1].name == "alpha");

    const DegreeTableRow& first = table.rows[0];
    CHECK(first.actor == 1);       // degrees: alpha 2, beta 1 -> multidegree 5
    CHECK(first.multilayer == 5);
    CHECK(first.aggregate == 2);
    REQUIRE(first.role.has_value());
    CHECK(first.role->display() == "Boss");

    // actor 3 is absent from beta: nullopt cell, not zero
    const auto& row3 = *std::find_if(table.rows.begin(), table.rows.end(),
                                     [](const DegreeTableRow& r) { return r.actor == 3; });
    CHECK_FALSE(row3.per_layer[0].has_value());
    CHECK(row3.per_layer[1] == 1);
    CHECK_FALSE(row3.role.has_value());
}

TEST_CASE("comparison_table on an empty network is empty")
{
    const MultiplexNetwork net = NetworkBuilder{}.build();
    CHECK(comparison_table(net, nullptr, 1).rows.empty());
}

#ifdef MUXDEG_DATA_DIR
TEST_CASE("Montagna: union degree never exceeds the per-layer sum, multidegree dominates by 2")
{
    const MultiplexNetwork& net = montagna().network;
    const DegreeVector aggregate = approach1_aggregate_degrees(net);
    const DegreeVector multi = approach3_multilayer_degrees(net);
    const auto per_layer = approach2_per_layer_degrees(net);
    for (ActorId actor : net.actors()) {
        const std::size_t i = net.actor_index(actor);
        const std::int64_t sum = per_layer[0].second.at(i) + per_layer[1].second.at(i);
        CHECK(aggregate.at(i) <= sum);
        CHECK(multi.at(i) == sum + 2);
    }
}
#endif

TEST_CASE("histogram_data")
{
    const MultiplexNetwork net = two_layer();
    const DegreeTable table = comparison_table(net, nullptr, 10);
    const auto series = histogram_data(table);
    REQUIRE(series.size() == table.rows.size());

    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i].actor == table.rows[i].actor);
        REQUIRE(series[i].values.size() == 4);
        CHECK(series[i].values[0] == std::pair<std::string, std::int64_t>{"Multilayer",
                                                                          table.rows[i].multilayer});
        CHECK(series[i].values[1].second == table.rows[i].aggregate);
        // absent cells flatten to 0 in histogram data
        CHECK(series[i].values[2].first == "beta");
        CHECK(series[i].values[2].second == table.rows[i].per_layer[0].value_or(0));
    }

    CHECK_THROWS_AS(histogram_data(DegreeTable{}), Error);
}

TEST_SUITE_END();
