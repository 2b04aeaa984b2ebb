#include "doctest.h"

#include <string>

#include "json.hpp"

#include "idom/graph6.hpp"
#include "idom/labeling.hpp"
#include "idom/verify.hpp"

using namespace idom;

namespace {

SuiteConfig tiny_config() {
    SuiteConfig c;
    c.seed = 5;
    c.max_n = 4;
    return c;
}

}  // namespace

TEST_CASE("check ids are fixed and ordered") {
    const auto& ids = theorem_ids();
    REQUIRE(ids.size() == 16);
    CHECK(ids.front() == "T1");
    CHECK(ids[9] == "T10");
    CHECK(ids[10] == "L1");
    CHECK(ids.back() == "SANDWICH");
    CHECK_THROWS_AS(check_theorem("NOPE", {}, tiny_config()), std::invalid_argument);
}

TEST_CASE("path check rows match the closed form") {
    SuiteConfig c;
    c.seed = 5;
    auto rows = check_theorem("T1", {6}, c);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.theorem == "T1");
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.expected == r.computed);
    }
    CHECK(rows[4].instance == "P_5");
    CHECK(rows[4].computed == "3");
    CHECK(rows[4].certificate == "1,0,1,0,1");
}

TEST_CASE("realization check probes both fenceposts") {
    auto rows = check_theorem("T4", {3}, tiny_config());
    int value_rows = 0, error_rows = 0;
    for (const auto& r : rows) {
        CHECK(r.status == CheckStatus::pass);
        if (r.expected == "error") ++error_rows;
        else ++value_rows;
    }
    CHECK(value_rows == 6);  // a in [n+1, 2n] over n = 1..3
    CHECK(error_rows == 6);  // two rejected fenceposts per n
}

TEST_CASE("a zero budget surfaces as exceeded, never as pass") {
    SuiteConfig c = tiny_config();
    c.budget_secs = 0.0;
    auto rows = check_theorem("T1", {3}, c);
    REQUIRE(rows.size() == 3);
    // A single vertex is answered by the isolated-vertex rule before any
    // search starts, so it stays optimal even with no budget; every instance
    // that needs the search must report exceeded.
    CHECK(rows[0].status == CheckStatus::pass);
    CHECK(rows[1].status == CheckStatus::budget_exceeded);
    CHECK(rows[2].status == CheckStatus::budget_exceeded);
}

TEST_CASE("the registry feeds the sandwich audit") {
    SuiteConfig c = tiny_config();
    SuiteContext ctx(c);
    CHECK(ctx.instances().empty());
    ctx.italian(path_graph(4));
    ctx.italian(complete_graph(3));
    CHECK(ctx.instances().size() == 2);
    CHECK(ctx.instances().at(encode_graph6(path_graph(4))) == 3);

    auto rows = check_theorem("SANDWICH", {}, c, ctx);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == CheckStatus::pass);
    CHECK(rows[0].computed == "checked 2, exceptions 0");
}

TEST_CASE("full suite passes at reduced scale") {
    auto report = run_suite(tiny_config());
    CHECK(report.summary.fail == 0);
    CHECK(report.summary.exceeded == 0);
    CHECK(report.summary.pass > 100);
    CHECK(report.results.size() ==
          static_cast<std::size_t>(report.summary.pass + report.summary.fail +
                                   report.summary.exceeded));
    // Every advertised check contributes at least one row.
    for (const auto& id : theorem_ids()) {
        bool found = false;
        for (const auto& r : report.results) found = found || r.theorem == id;
        CHECK_MESSAGE(found, id);
    }
}

TEST_CASE("value-row certificates revalidate against the graph") {
    SuiteConfig c;
    for (const auto& r : check_theorem("T1", {8}, c)) {
        int n = std::stoi(r.instance.substr(2));
        Labeling f = Labeling::parse(r.certificate);
        CHECK(is_idf(path_graph(n), f));
        CHECK(std::to_string(f.weight()) == r.computed);
    }
}

TEST_CASE("pendant path check carries nine solver rows plus the witness row") {
    SuiteConfig c;
    auto rows = check_theorem("T9", {9}, c);
    REQUIRE(rows.size() == 10);
    int expected[] = {2, 3, 4, 6, 7, 8, 10, 11, 12};
    for (int i = 0; i < 9; ++i) {
        CHECK(rows[i].status == CheckStatus::pass);
        CHECK(rows[i].computed == std::to_string(expected[i]));
    }
    CHECK(rows[9].instance == "witness n=1..30");
    CHECK(rows[9].status == CheckStatus::pass);
}

TEST_CASE("params clamp the twin sweep") {
    auto rows = check_theorem("TT", {3}, tiny_config());
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("a suite clamped to single-vertex bases still passes") {
    SuiteConfig c;
    c.max_n = 1;
    auto report = run_suite(c);
    CHECK(report.summary.fail == 0);
    CHECK(report.summary.exceeded == 0);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
    auto a = report_json(run_suite(tiny_config()));
    auto b = report_json(run_suite(tiny_config()));
    CHECK(a == b);
}

TEST_CASE("report json is well formed") {
    SuiteConfig c = tiny_config();
    SuiteReport report;
    report.config = c;
    report.results = check_theorem("T1", {3}, c);
    report.summary.pass = static_cast<int>(report.results.size());
    auto doc = nlohmann::json::parse(report_json(report));
    CHECK(doc["suite"]["seed"] == 5);
    CHECK(doc["suite"]["max_n"] == 4);
    REQUIRE(doc["results"].size() == 3);
    CHECK(doc["results"][0]["theorem"] == "T1");
    CHECK(doc["results"][0]["status"] == "pass");
    CHECK(doc["results"][0]["instance"] == "P_1");
    CHECK(doc["summary"]["pass"] == 3);
    CHECK(doc["summary"]["fail"] == 0);
}
