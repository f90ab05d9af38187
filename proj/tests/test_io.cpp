#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "graphex/error.hpp"
#include "graphex/io.hpp"

using namespace graphex;

TEST_CASE("edge list parsing") {
    std::istringstream in("# comment\nalice bob\n\nbob carol\ncarol carol\nbob alice\n");
    const auto lg = parse_edge_list(in);
    CHECK(lg.labels == std::vector<std::string>{"alice", "bob", "carol"});
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 3);
    CHECK(lg.graph.self_loop_count() == 1);
}

TEST_CASE("malformed lines report their number") {
    std::istringstream in("1 2\n3\n");
    try {
        parse_edge_list(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream bad_trace("1.0 a b\nxx a b\n");
    CHECK_THROWS_AS(parse_trace(bad_trace), ParseError);
}

TEST_CASE("traces sort stably and snapshot by time") {
    std::istringstream in("5 c d\n1 a b\n5 a c\n3 b a\n");
    const auto trace = parse_trace(in);
    REQUIRE(trace.size() == 4);
    CHECK(trace[0] == TraceEvent{1.0, "a", "b"});
    CHECK(trace[2] == TraceEvent{5.0, "c", "d"});
    CHECK(snapshot(trace, 0.5).empty());
    const auto s3 = snapshot(trace, 3.0);
    CHECK(s3.vertex_count() == 2);
    CHECK(s3.edge_count() == 1);
    const auto s5 = snapshot(trace, 5.0);
    CHECK(s5.vertex_count() == 4);
    CHECK(s5.edge_count() == 3);
    // snapshots share ids
    CHECK(s5.index_of(s3.id_at(0)).has_value());
}

TEST_CASE("edge list round trip") {
    std::istringstream in("1 2\n2 3\n3 3\n");
    const auto g = parse_edge_list(in).graph;
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(parse_edge_list(back).graph == g);
}

TEST_CASE("doubles round-trip") {
    for (const double x : {0.1, 1.0 / 3.0, 4624.78, 1e-300, -2.5}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("CSV and JSON output") {
    ResultTable t;
    t.config.sizes = {25.0};
    t.rows.push_back({25.0, "nsvr", "rmse", 0.125, 0.002, 2000});
    t.notices.push_back("note");
    std::ostringstream csv;
    write_csv(csv, t);
    CHECK(csv.str() == "size,estimator,metric,value,stderr,n_reps\n25,nsvr,rmse,0.125,0.002,2000\n");
    std::ostringstream js;
    write_json(js, t);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["version"] == kVersion);
    CHECK(doc["rows"][0]["value"] == 0.125);
    CHECK(doc["notices"][0] == "note");
    CHECK(doc["config"]["model"] == "ggp-cf");
}
