#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "muxdeg/io.hpp"
#include "test_support.hpp"

using namespace muxdeg;
using namespace muxdeg::testing;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("muxdeg_io_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }

    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }

    std::string file(const std::string& name, const std::string& content) const
    {
        const fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }
};

template <typename F>
ErrorKind thrown_kind(F&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a muxdeg::Error");
    return ErrorKind::invalid_argument;
}

std::string message_of(std::function<void()> fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("load_network on a triangle layer")
{
    TempDir dir;
    const auto path = dir.file("tri.csv", "source,target,weight\n1,2,1\n2,3,1\n1,3,1\n");
    const LoadResult result = load_network({{path, "alpha"}});
    CHECK(result.network.actor_count() == 3);
    CHECK(result.network.edges().size() == 3);
    CHECK(result.report.layers.size() == 1);
    CHECK(result.report.layers[0].active_actors == 3);
    CHECK(result.report.layers[0].edges == 3);
    CHECK(result.report.total_actors == 3);
    CHECK(result.report.intralayer_edges == 3);
    CHECK(result.report.coupling_edges == 0); // single layer
    CHECK(result.report.warnings.empty());
}

TEST_CASE("load_network error paths")
{
    TempDir dir;

    SUBCASE("missing file")
    {
        CHECK(thrown_kind([&] { load_network({{(dir.path / "nope.csv").string(), "alpha"}}); }) ==
              ErrorKind::io_failure);
    }

    SUBCASE("missing column names the column")
    {
        const auto path = dir.file("bad.csv", "from,to\n1,2\n");
        CHECK(thrown_kind([&] { load_network({{path, "alpha"}}); }) ==
              ErrorKind::schema_mismatch);
        CHECK(message_of([&] { load_network({{path, "alpha"}}); }).find("source") !=
              std::string::npos);
    }

    SUBCASE("self-loop row is rejected with its line number")
    {
        const auto path = dir.file("loop.csv", "source,target,weight\n1,2,1\n4,4,1\n");
        CHECK(thrown_kind([&] { load_network({{path, "alpha"}}); }) == ErrorKind::parse_failure);
        CHECK(message_of([&] { load_network({{path, "alpha"}}); }).find("line 3") !=
              std::string::npos);
    }

    SUBCASE("non-integer id")
    {
        const auto path = dir.file("nan.csv", "source,target,weight\nx,2,1\n");
        CHECK(thrown_kind([&] { load_network({{path, "alpha"}}); }) == ErrorKind::parse_failure);
    }

    SUBCASE("non-positive weight")
    {
        const auto path = dir.file("w0.csv", "source,target,weight\n1,2,0\n");
        CHECK(thrown_kind([&] { load_network({{path, "alpha"}}); }) == ErrorKind::parse_failure);
    }

    SUBCASE("wrong field count")
    {
        const auto path = dir.file("short.csv", "source,target,weight\n1,2\n");
        CHECK(thrown_kind([&] { load_network({{path, "alpha"}}); }) == ErrorKind::parse_failure);
    }

    SUBCASE("no specs")
    {
        CHECK(thrown_kind([&] { load_network({}); }) == ErrorKind::invalid_argument);
    }
}

TEST_CASE("load_network merges duplicate rows with a warning")
{
    TempDir dir;
    const auto path = dir.file("dup.csv", "source,target,weight\n1,2,2\n2,1,1\n");
    const LoadResult result = load_network({{path, "alpha"}});
    CHECK(result.network.edges().size() == 1);
    CHECK(result.network.edges()[0].weight == 3);
    REQUIRE(result.report.warnings.size() == 1);
    CHECK(result.report.warnings[0].find("duplicate edge") != std::string::npos);
}

TEST_CASE("missing weight column defaults every edge to weight 1")
{
    TempDir dir;
    const auto path = dir.file("nw.csv", "source,target\n1,2\n2,3\n");
    const LoadResult result = load_network({{path, "alpha"}});
    const LayerId& layer = result.network.layer("alpha");
    CHECK(result.network.layer_strength(2, layer) == result.network.layer_degree(2, layer));
}

TEST_CASE("column map absorbs naming drift, CRLF tolerated")
{
    TempDir dir;
    const auto path = dir.file("drift.csv", "From,To,Calls\r\n1,2,4\r\n");
    LayerSourceSpec spec{path, "alpha", "From", "To", "Calls"};
    const LoadResult result = load_network({spec});
    CHECK(result.network.layer_strength(1, result.network.layer("alpha")) == 4);

    SUBCASE("indistinct column names are rejected")
    {
        spec.target_column = "From";
        CHECK(thrown_kind([&] { load_network({spec}); }) == ErrorKind::invalid_argument);
    }
}

TEST_CASE("header-only layer loads with zero counts and a multiplex warning")
{
    TempDir dir;
    const auto a = dir.file("a.csv", "source,target,weight\n1,2,1\n");
    const auto b = dir.file("b.csv", "source,target,weight\n");
    const LoadResult result = load_network({{a, "alpha"}, {b, "beta"}});
    CHECK(result.report.layers[1].active_actors == 0);
    CHECK(result.report.layers[1].edges == 0);
    REQUIRE_FALSE(result.report.warnings.empty());
    CHECK(result.report.warnings[0].find("shares no active actor") != std::string::npos);
}

TEST_CASE("load_roles")
{
    TempDir dir;

    SUBCASE("records with and without family")
    {
        const auto path = dir.file("roles.csv", "actor,role,family\n18,Caporegime,Mistretta\n"
                                                "43,Messaggero,\n");
        const RolesResult result = load_roles(path);
        CHECK(result.roles.size() == 2);
        CHECK(result.roles.at(18).role == "Caporegime");
        CHECK(result.roles.at(18).family == "Mistretta");
        CHECK(result.roles.at(18).display() == "Caporegime Mistretta Family");
        CHECK(result.roles.at(43).display() == "Messaggero");
        CHECK(result.warnings.empty());
    }

    SUBCASE("empty file with header gives an empty map")
    {
        const auto path = dir.file("empty.csv", "actor,role,family\n");
        CHECK(load_roles(path).roles.empty());
    }

    SUBCASE("duplicate actors: last record wins, warning recorded")
    {
        const auto path = dir.file("dup.csv", "actor,role\n7,Soldier\n7,Boss\n");
        const RolesResult result = load_roles(path);
        CHECK(result.roles.at(7).role == "Boss");
        REQUIRE(result.roles.size() == 1);
        REQUIRE(result.warnings.size() == 1);
        CHECK(result.warnings[0].find("duplicate role") != std::string::npos);
    }

    SUBCASE("unknown actors are flagged against a network")
    {
        const auto edges = dir.file("e.csv", "source,target\n1,2\n");
        const auto roles = dir.file("r.csv", "actor,role\n1,Boss\n99,Soldier\n");
        const LoadResult net = load_network({{edges, "alpha"}});
        const auto warnings = role_warnings(net.network, load_roles(roles).roles);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("99") != std::string::npos);
    }
}

TEST_CASE("degree table CSV is byte-stable with absent cells empty")
{
    DegreeTable table;
    table.layer_order = {LayerId{1, "Phone Calls"}, LayerId{0, "Meetings"}};
    table.rows.push_back(DegreeTableRow{
        18, RoleRecord{18, "Caporegime", "Mistretta"}, 51, 41, {25, 24}});
    table.rows.push_back(DegreeTableRow{
        89, RoleRecord{89, "Associate", "Batanesi"}, 14, 12, {std::nullopt, 12}});

    std::ostringstream out;
    export_degree_table(table, nullptr, ExportFormat::csv, out);
    CHECK(out.str() == "actor,role,multilayer,aggregate,phone_calls,meetings\n"
                       "18,Caporegime Mistretta Family,51,41,25,24\n"
                       "89,Associate Batanesi Family,14,12,,12\n");

    std::ostringstream again;
    export_degree_table(table, nullptr, ExportFormat::csv, again);
    CHECK(out.str() == again.str());

    SUBCASE("JSON carries null for absent cells and missing roles")
    {
        table.rows[1].role.reset();
        std::ostringstream json_out;
        export_degree_table(table, nullptr, ExportFormat::json, json_out);
        const auto j = nlohmann::json::parse(json_out.str());
        CHECK(j["network"].is_null());
        CHECK(j["results"][0]["actor"] == 18);
        CHECK(j["results"][0]["role"] == "Caporegime Mistretta Family");
        CHECK(j["results"][0]["scores"]["multilayer"] == 51);
        CHECK(j["results"][0]["scores"]["phone_calls"] == 25);
        CHECK(j["results"][1]["scores"]["phone_calls"].is_null());
        CHECK(j["results"][1]["role"].is_null());
    }
}

TEST_CASE("empty ranking exports as a header-only file")
{
    std::ostringstream out;
    export_ranking({}, ExportFormat::csv, out);
    CHECK(out.str() == "rank,actor,score,role\n");
}

TEST_CASE("round-trip: exported layers reload to identical degree tables")
{
    Rng rng(83u);
    TempDir dir;
    for (int instance = 0; instance < 10; ++instance) {
        const MultiplexNetwork net =
            random_network(rng, RandomNetworkOptions{.allow_isolated = false});

        std::vector<LayerSourceSpec> specs;
        for (const auto& layer : net.layers()) {
            const auto path = dir.file("layer" + std::to_string(layer.index) + "_" +
                                           std::to_string(instance) + ".csv",
                                       layer_edgelist_csv(net, layer));
            specs.push_back(LayerSourceSpec{path, layer.name});
        }
        const MultiplexNetwork reloaded = load_network(specs).network;

        REQUIRE(reloaded.actors() == net.actors());
        const DegreeTable before = comparison_table(net, nullptr, net.actor_count());
        const DegreeTable after = comparison_table(reloaded, nullptr, net.actor_count());
        REQUIRE(before.rows.size() == after.rows.size());
        for (std::size_t i = 0; i < before.rows.size(); ++i) {
            CHECK(before.rows[i].actor == after.rows[i].actor);
            CHECK(before.rows[i].multilayer == after.rows[i].multilayer);
            CHECK(before.rows[i].aggregate == after.rows[i].aggregate);
            CHECK(before.rows[i].per_layer == after.rows[i].per_layer);
        }
    }
}

#ifdef MUXDEG_DATA_DIR
TEST_CASE("Montagna fixture loads with the published statistics")
{
    const ValidationReport& report = montagna().report;
    REQUIRE(report.layers.size() == 2);
    CHECK(report.layers[0].active_actors == 101);
    CHECK(report.layers[0].edges == 256);
    CHECK(report.layers[1].active_actors == 100);
    CHECK(report.layers[1].edges == 124);
    REQUIRE(report.shared.size() == 1);
    CHECK(report.shared[0].count == 47);
    CHECK(report.total_actors == 154);
    CHECK(report.intralayer_edges == 380);
    CHECK(report.coupling_edges == 154);

    SUBCASE("report counts equal an independent recount")
    {
        const MultiplexNetwork& net = montagna().network;
        for (const auto& stats : report.layers) {
            CHECK(stats.active_actors == net.active_actor_count(stats.layer));
            CHECK(stats.edges == net.layer_edge_count(stats.layer));
        }
        CHECK(report.shared[0].count ==
              net.shared_actor_count(net.layer("Meetings"), net.layer("Phone Calls")));
        CHECK(report.total_actors == net.actor_count());
    }

    SUBCASE("fixture roles")
    {
        const RolesResult roles = load_roles(std::string(MUXDEG_DATA_DIR) + "/roles.csv");
        CHECK(roles.roles.at(18).role == "Caporegime");
        CHECK(roles.roles.at(18).family == "Mistretta");
        CHECK(roles.roles.at(43).role == "Messaggero");
        CHECK(roles.warnings.empty());
        CHECK(role_warnings(montagna().network, roles.roles).empty());
    }
}

TEST_CASE("layer load order only relabels the analysis")
{
    const std::string dir = MUXDEG_DATA_DIR;
    const LoadResult forward = load_network({{dir + "/meetings.csv", "Meetings"},
                                             {dir + "/phone_calls.csv", "Phone Calls"}});
    const LoadResult reversed = load_network({{dir + "/phone_calls.csv", "Phone Calls"},
                                              {dir + "/meetings.csv", "Meetings"}});

    CHECK(multidegree(forward.network).values == multidegree(reversed.network).values);
    CHECK(approach1_aggregate_degrees(forward.network).values ==
          approach1_aggregate_degrees(reversed.network).values);
    for (ActorId actor : forward.network.actors()) {
        CHECK(forward.network.layer_degree(actor, forward.network.layer("Meetings")) ==
              reversed.network.layer_degree(actor, reversed.network.layer("Meetings")));
    }
}
#endif

TEST_SUITE_END();
