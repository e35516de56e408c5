#include "doctest.h"
#include "json.hpp"
#include "logext/analysis.hpp"
#include "logext/errors.hpp"
#include "testutil.hpp"

using namespace logext;
using namespace logext::testutil;

TEST_SUITE("analysis") {

TEST_CASE("pipeline on E8") {
    auto r7 = run_analysis(make_e8(), 7, SearchMode::Exhaustive);
    CHECK(r7.disc.is_lc());
    CHECK(r7.trace.has_value());
    CHECK(r7.verdicts.log_ext_1forms == VerdictStatus::Holds);
    CHECK(!r7.citations.empty());

    auto r5 = run_analysis(make_e8(), 5, SearchMode::Exhaustive);
    CHECK(!r5.trace.has_value());
    CHECK(r5.verdicts.log_ext_1forms == VerdictStatus::FailsByExample);
}

TEST_CASE("json report is byte-deterministic and schema-complete") {
    auto r = run_analysis(make_e8(), 7, SearchMode::Exhaustive);
    std::string a = report_json(r);
    std::string b = report_json(run_analysis(make_e8(), 7,
                                             SearchMode::Exhaustive));
    CHECK(a == b);
    auto doc = nlohmann::json::parse(a);
    for (const char* key :
         {"discrepancies", "class", "trace", "verdicts", "citations"})
        CHECK(doc.contains(key));
    CHECK(doc["discrepancies"]["E1"] == "0");
    CHECK(doc["verdicts"]["log_ext_1forms"] == "holds");
    CHECK(doc["trace"].size() == 8);
}

TEST_CASE("digest is stable and input-sensitive") {
    CHECK(graph_digest(make_e8()) == graph_digest(make_e8()));
    CHECK(graph_digest(make_e8()) != graph_digest(make_chain({2})));
}

TEST_CASE("non-lc input still reports") {
    DualGraph bad = make_cycle(3, 3);
    bad.add_boundary({"D", {{"C1", 1}}});
    auto r = run_analysis(bad, 7, SearchMode::Exhaustive);
    CHECK(!r.disc.is_lc());
    CHECK(!r.cls.has_value());
    std::string text = report_text(r);
    CHECK(text.find("not-lc") != std::string::npos);

    CHECK_THROWS_AS(run_analysis(make_cycle(3, 2), 7, SearchMode::Exhaustive),
                    LatticeError);
}

}  // TEST_SUITE
