#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace majorant {

using ordered_json = nlohmann::ordered_json;

/// One verified (or failed) inequality of the chain.
struct ProofStep {
    std::string name;
    std::string claim;
    double value = 0.0;
    double error = 0.0;   ///< certified error bound carried by the value
    double margin = 0.0;  ///< slack of the inequality
    bool pass = false;
    ordered_json details = ordered_json::object();
    double wall_ms = 0.0;

    friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct ProofReport {
    int k = 0;
    std::string verdict;  ///< "VERIFIED" or "FAILED"
    std::vector<ProofStep> steps;
    ordered_json config_echo = ordered_json::object();
    ordered_json tables = ordered_json::array();

    bool verified() const { return verdict == "VERIFIED"; }
    friend bool operator==(const ProofReport&, const ProofReport&) = default;
};

inline ordered_json report_to_json(const ProofReport& r) {
    ordered_json j;
    j["k"] = r.k;
    j["verdict"] = r.verdict;
    j["config"] = r.config_echo;
    j["steps"] = ordered_json::array();
    for (const auto& s : r.steps) {
        ordered_json js;
        js["name"] = s.name;
        js["claim"] = s.claim;
        js["value"] = s.value;
        js["error"] = s.error;
        js["margin"] = s.margin;
        js["pass"] = s.pass;
        js["details"] = s.details;
        js["wall_ms"] = s.wall_ms;
        j["steps"].push_back(js);
    }
    j["tables"] = r.tables;
    return j;
}

inline ProofReport report_from_json(const ordered_json& j) {
    ProofReport r;
    r.k = j.at("k").get<int>();
    r.verdict = j.at("verdict").get<std::string>();
    r.config_echo = j.at("config");
    for (const auto& js : j.at("steps")) {
        ProofStep s;
        s.name = js.at("name").get<std::string>();
        s.claim = js.at("claim").get<std::string>();
        s.value = js.at("value").get<double>();
        s.error = js.at("error").get<double>();
        s.margin = js.at("margin").get<double>();
        s.pass = js.at("pass").get<bool>();
        s.details = js.at("details");
        s.wall_ms = js.at("wall_ms").get<double>();
        r.steps.push_back(std::move(s));
    }
    r.tables = j.at("tables");
    return r;
}

inline ProofReport report_from_json_text(const std::string& text) {
    return report_from_json(ordered_json::parse(text));
}

namespace detail {

inline void markdown_table(std::string& out, const ordered_json& table) {
    out += "| j | fourth-derivative bound | delta_j | N*_j | coefficient | reference |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const auto& row : table.at("rows")) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "| %d | %.3g | %g | %d | %.10g | %.10g |\n",
                      row.at("j").get<int>(), row.at("fourth_bound").get<double>(),
                      row.at("delta").get<double>(), row.at("n_star").get<int>(),
                      row.at("coeff").get<double>(), row.at("reference").get<double>());
        out += buf;
    }
    char tail[256];
    std::snprintf(tail, sizeof(tail),
                  "\nremainder budget %.6g, total budget %g, nodes %d\n",
                  table.at("remainder").get<double>(), table.at("delta_total").get<double>(),
                  table.at("nodes").get<int>());
    out += tail;
}

}  // namespace detail

/// Markdown report mirroring the lemma structure, computed values next to the
/// reference ones.
inline std::string report_to_markdown(const ProofReport& r) {
    std::string out = "# Verification report, case k = " + std::to_string(r.k) + "\n\n";
    out += "Verdict: **" + r.verdict + "**\n\n";
    out += "## Steps\n\n";
    int idx = 1;
    for (const auto& s : r.steps) {
        char buf[512];
        std::snprintf(buf, sizeof(buf),
                      "### %d. %s\n\n%s\n\nvalue %.12g, certified error %.3g, margin %.6g, "
                      "%s (%.1f ms)\n\n",
                      idx++, s.name.c_str(), s.claim.c_str(), s.value, s.error, s.margin,
                      s.pass ? "PASS" : "FAIL", s.wall_ms);
        out += buf;
        if (!s.details.empty()) out += "```json\n" + s.details.dump(2) + "\n```\n\n";
    }
    if (!r.tables.empty()) {
        int which = 1;
        for (const auto& t : r.tables) {
            char hdr[256];
            std::snprintf(hdr, sizeof(hdr), "## Table %d: coefficients around t0 = %g\n\n",
                          which++, t.at("center").get<double>());
            out += hdr;
            detail::markdown_table(out, t);
            out += "\n";
        }
    }
    out += "## Configuration\n\n```json\n" + r.config_echo.dump(2) + "\n```\n";
    return out;
}

inline std::string emit_report(const ProofReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r).dump(2) + "\n";
    if (format == "md" || format == "markdown") return report_to_markdown(r);
    throw std::invalid_argument("emit_report: format must be json or md");
}

}  // namespace majorant
