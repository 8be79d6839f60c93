#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "majorant/prove.hpp"
#include "majorant/report.hpp"

using namespace majorant;

namespace {

const ProofReport& report3() {
    static const ProofReport r = prove(3);
    return r;
}

ordered_json strip_timing(const ProofReport& r) {
    auto j = report_to_json(r);
    for (auto& s : j["steps"]) s["wall_ms"] = 0.0;
    return j;
}

}  // namespace

TEST_CASE("default verification succeeds for both cases") {
    const auto& r3 = report3();
    REQUIRE(r3.verdict == "VERIFIED");
    REQUIRE(r3.steps.size() == 5);

    const auto r4 = prove(4);
    REQUIRE(r4.verdict == "VERIFIED");
    REQUIRE(r4.steps.size() == 7);
}

TEST_CASE("an infeasible budget fails at the right step") {
    auto cfg = default_config(3);
    cfg.positivity_deltas[0] = 0.008;  // 0.014012641 - 0.016 < 0
    const auto r = prove(3, cfg);
    REQUIRE(r.verdict == "FAILED");
    bool found = false;
    for (const auto& s : r.steps) {
        if (s.name == "positivity_d1") {
            found = true;
            REQUIRE(!s.pass);
            REQUIRE(s.margin < 0.0);
        }
    }
    REQUIRE(found);
}

TEST_CASE("reports round-trip through JSON") {
    const auto& r = report3();
    const std::string text = emit_report(r, "json");
    const auto back = report_from_json_text(text);
    REQUIRE(back == r);
    REQUIRE(report_to_json(back) == report_to_json(r));
}

TEST_CASE("identical configurations give identical reports, timing aside") {
    const auto a = prove(3);
    const auto b = prove(3);
    REQUIRE(strip_timing(a) == strip_timing(b));
}

TEST_CASE("json shape: top-level fields and per-step payload") {
    const auto j = report_to_json(report3());
    REQUIRE(j.contains("k"));
    REQUIRE(j.contains("verdict"));
    REQUIRE(j.contains("steps"));
    REQUIRE(j.contains("config"));
    REQUIRE(j.contains("tables"));
    REQUIRE(j["steps"].is_array());
    for (const auto& s : j["steps"]) {
        REQUIRE(s.contains("name"));
        REQUIRE(s.contains("claim"));
        REQUIRE(s.contains("value"));
        REQUIRE(s.contains("error"));
        REQUIRE(s.contains("margin"));
        REQUIRE(s.contains("pass"));
    }
    // every constant used by the certified steps is echoed
    const auto& cfg = j["config"];
    REQUIRE(cfg.contains("positivity_deltas"));
    REQUIRE(cfg.contains("models"));
    REQUIRE(cfg.contains("ledger"));
    REQUIRE(cfg["ledger"].contains("M"));
    REQUIRE(cfg["ledger"].contains("M_star"));
    REQUIRE(cfg.contains("quad_error_denominator"));
    REQUIRE(cfg.contains("budget_guard"));
}

TEST_CASE("markdown report carries the coefficient table") {
    const std::string md = report_to_markdown(report3());
    REQUIRE(md.find("Table 1") != std::string::npos);
    REQUIRE(md.find("VERIFIED") != std::string::npos);
    REQUIRE(md.find("reference") != std::string::npos);
    REQUIRE(md.find("-8.097236") != std::string::npos);
}

TEST_CASE("emit_report rejects unknown formats") {
    REQUIRE_THROWS_AS(emit_report(report3(), "xml"), std::invalid_argument);
}
