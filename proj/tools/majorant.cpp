// Command-line front end: runs the verification chain, prints the coefficient
// tables and the bound ledgers, and demos the quadrature rule.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "majorant/bounds.hpp"
#include "majorant/parseval.hpp"
#include "majorant/prove.hpp"
#include "majorant/quadrature.hpp"
#include "majorant/report.hpp"
#include "majorant/taylor.hpp"

namespace {

using majorant::ordered_json;

int env_max_nodes() {
    if (const char* s = std::getenv("MAJORANT_MAX_NODES")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 500;
}

void apply_budget_file(majorant::ProofConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open budget file " + path);
    const auto j = ordered_json::parse(in);
    const std::string key = "k" + std::to_string(cfg.k);
    if (!j.contains(key)) return;
    const auto& jk = j.at(key);
    if (jk.contains("positivity_deltas"))
        cfg.positivity_deltas = jk.at("positivity_deltas").get<std::vector<double>>();
    if (jk.contains("models")) {
        const auto& jm = jk.at("models");
        for (std::size_t i = 0; i < cfg.models.size() && i < jm.size(); ++i) {
            if (jm[i].contains("coeff_deltas"))
                cfg.models[i].coeff_deltas = jm[i].at("coeff_deltas").get<std::vector<double>>();
            if (jm[i].contains("delta_total"))
                cfg.models[i].delta_total = jm[i].at("delta_total").get<double>();
        }
    }
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

int cmd_prove(int k, const std::string& format, const std::string& out_path, int nodes,
              const std::string& budget_file) {
    auto cfg = majorant::default_config(k);
    cfg.max_nodes = env_max_nodes();
    if (!budget_file.empty()) apply_budget_file(cfg, budget_file);
    if (nodes > 0) {
        if (nodes > cfg.max_nodes)
            std::cerr << "warning: node override " << nodes << " exceeds the reliability cap "
                      << cfg.max_nodes << "\n";
        cfg.positivity_nodes = nodes;
        cfg.table_nodes = nodes;
    }
    const auto report = majorant::prove(k, cfg);
    write_out(majorant::emit_report(report, format), out_path);
    std::cerr << "k = " << k << ": " << report.verdict << "\n";
    return report.verified() ? 0 : 1;
}

int cmd_tables(int which, const std::string& format, const std::string& out_path) {
    const int k = which == 1 ? 3 : 4;
    const auto cfg = majorant::default_config(k);
    const auto ledger = majorant::make_ledger(k);
    const auto& mc = cfg.models[which == 3 ? 1 : 0];
    const int r = static_cast<int>(cfg.positivity_deltas.size()) + 2;
    const auto model = majorant::build_taylor_model(k, r, mc.center, mc.radius, mc.degree,
                                                    mc.coeff_deltas, mc.delta_total, ledger,
                                                    cfg.table_nodes, cfg.max_nodes);
    const std::vector<double> ref = majorant::detail::reference_coeffs(k, which == 3 ? 1 : 0);

    ordered_json table;
    table["which"] = which;
    table["k"] = k;
    table["center"] = model.center;
    table["radius"] = model.radius;
    table["degree"] = model.degree;
    table["nodes"] = model.nodes;
    table["remainder"] = model.remainder;
    table["delta_total"] = model.delta_total;
    table["rows"] = ordered_json::array();
    for (int j = 0; j <= model.degree; ++j) {
        ordered_json row;
        row["j"] = j;
        row["fourth_bound"] = model.fourth_bounds[j];
        row["delta"] = model.budgets[j];
        row["n_star"] = model.n_star[j];
        row["coeff"] = model.coeffs[j];
        row["reference"] = ref[j];
        table["rows"].push_back(row);
    }
    if (format == "json") {
        write_out(table.dump(2) + "\n", out_path);
    } else {
        std::string text;
        char hdr[128];
        std::snprintf(hdr, sizeof(hdr), "Coefficient table %d (k = %d, t0 = %g)\n\n", which, k,
                      model.center);
        text += hdr;
        majorant::detail::markdown_table(text, table);
        write_out(text, out_path);
    }
    return 0;
}

int cmd_bounds(int k, const std::string& format, const std::string& out_path) {
    const auto ledger = majorant::make_ledger(k);
    ordered_json j = majorant::detail::ledger_json(ledger);
    for (auto sign : {majorant::Sign::plus, majorant::Sign::minus}) {
        const auto rb = majorant::ratio_bound_details({k, sign});
        ordered_json rj;
        rj["certified"] = rb.certified;
        rj["estimate"] = rb.estimate;
        rj["arg_max_u"] = rb.arg_max;
        rj["den_min"] = rb.den_min;
        rj["den_arg_min_u"] = rb.den_arg_min;
        j[sign == majorant::Sign::plus ? "ratio_plus" : "ratio_minus"] = rj;
    }
    for (auto sign : {majorant::Sign::plus, majorant::Sign::minus}) {
        const auto gm = majorant::g_min_details({k, sign});
        ordered_json gj;
        gj["certified"] = gm.certified;
        gj["observed"] = gm.observed;
        gj["arg_min_x"] = gm.arg_min;
        j[sign == majorant::Sign::plus ? "g_min_plus_scan" : "g_min_minus_scan"] = gj;
    }
    if (format == "json") {
        write_out(j.dump(2) + "\n", out_path);
    } else {
        write_out("Bound ledger for k = " + std::to_string(k) + "\n\n" + j.dump(2) + "\n",
                  out_path);
    }
    return 0;
}

int cmd_quad_demo() {
    using majorant::integrate;
    std::printf("quadrature demo on [0, 1/2]\n\n");
    std::printf("f = sin(2 pi x), exact integral 1/pi, fourth bound (2 pi)^4\n");
    const double fb = std::pow(2.0 * majorant::kPi, 4.0);
    const double exact = 1.0 / majorant::kPi;
    double prev = 0.0;
    for (int n : {25, 50, 100, 200}) {
        auto q = integrate([](double x) { return std::sin(2.0 * majorant::kPi * x); },
                           [](double x) {
                               return -4.0 * majorant::kPi * majorant::kPi *
                                      std::sin(2.0 * majorant::kPi * x);
                           },
                           fb, n);
        const double err = std::abs(q.value - exact);
        std::printf("  N = %3d  value %.15f  |error| %.3e  certified %.3e%s\n", n, q.value, err,
                    q.error_bound,
                    prev > 0 ? ("  ratio " + std::to_string(prev / err)).c_str() : "");
        prev = err;
    }
    std::printf("\nf = x^4, exact 1/160, fourth bound 24, N = 10\n");
    auto q = integrate([](double x) { return x * x * x * x; },
                       [](double x) { return 12.0 * x * x; }, 24.0, 10);
    std::printf("  value %.12f  |error| %.3e  certified %.3e\n", q.value,
                std::abs(q.value - 1.0 / 160.0), q.error_bound);
    std::printf("\nplanner: min_steps(2.3e10, 0.007) = %d, min_steps(7e10, 0.04) = %d\n",
                majorant::min_steps(2.3e10, 0.007), majorant::min_steps(7e10, 0.04));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified verification of the three-term majorant inequalities"};
    app.require_subcommand(1);

    int k = 3, which = 1, nodes = 0;
    std::string format = "md", out_path, budget_file;

    auto* prove = app.add_subcommand("prove", "run the full verification chain for one k");
    prove->add_option("--k", k, "case to verify")->check(CLI::IsMember({3, 4}))->required();
    prove->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    prove->add_option("--out", out_path, "write the report to a file");
    prove->add_option("--n", nodes, "override the quadrature node counts");
    prove->add_option("--budget-file", budget_file, "JSON file overriding the error budgets");

    auto* tables = app.add_subcommand("tables", "print one coefficient table");
    tables->add_option("--which", which, "1, 2 or 3")->check(CLI::IsMember({1, 2, 3}))->required();
    tables->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    tables->add_option("--out", out_path, "write to a file");

    auto* bounds = app.add_subcommand("bounds", "print the bound ledger for one k");
    bounds->add_option("--k", k, "case")->check(CLI::IsMember({3, 4}))->required();
    bounds->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    bounds->add_option("--out", out_path, "write to a file");

    auto* demo = app.add_subcommand("quad-demo", "show the quadrature rule at work");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(prove)) return cmd_prove(k, format, out_path, nodes, budget_file);
        if (app.got_subcommand(tables)) return cmd_tables(which, format, out_path);
        if (app.got_subcommand(bounds)) return cmd_bounds(k, format, out_path);
        if (app.got_subcommand(demo)) return cmd_quad_demo();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
