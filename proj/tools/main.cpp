#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cmhecke/report.hpp"
#include "cmhecke/verify.hpp"

namespace {

using namespace cmhecke;

double resolve_tol(const std::optional<double>& flag, double fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CMHECKE_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return fallback;
}

std::ostream& open_sink(const std::string& out_file, std::ofstream& file) {
    if (out_file.empty()) return std::cout;
    file.open(out_file);
    if (!file) {
        std::cerr << "cannot open " << out_file << "\n";
        std::exit(1);
    }
    return file;
}

void print_human(std::ostream& os, const AnalysisRecord& rec) {
    const FieldData& K = rec.field;
    os << "D = " << K.D << "  (" << case_name(K.two_case) << ")";
    if (K.d) os << "  d = " << *K.d;
    os << "  h = " << K.h << "  r = " << K.genus_rank << "  B = " << format_double(K.B) << "\n";
    if (K.special) {
        os << "  special discriminant (extra units); simplest characters not defined\n";
        return;
    }
    for (const auto& row : rec.characters) {
        os << "  character " << row.id << ": order " << row.order << ", conductor";
        for (const auto& [p, e] : row.conductor) os << " p" << p << "^" << e;
        os << ", dim = " << (row.dim.tag == DimensionTag::EqualsH ? "h" : "2h")
           << (row.dim.scalar_restriction ? " (scalar restriction)" : "") << ", W = " << row.W
           << ", ord = " << row.ord << "\n";
        if (row.analytic_supported) {
            const CentralReport& c = *row.central;
            os << "    L(1) = " << format_double(c.L1);
            if (c.LambdaPrime1) os << ", Lambda'(1) = " << format_double(*c.LambdaPrime1);
            os << ", bounds " << (c.bounds_ok ? "ok" : "violated") << "\n";
        } else {
            os << "    central L-data: unsupported for this ramification case\n";
        }
    }
}

int cmd_analyze(long long D, bool json, const NumericsConfig& cfg, const std::string& out_file) {
    std::ofstream file;
    std::ostream& os = open_sink(out_file, file);
    try {
        AnalysisRecord rec = analyze(D, cfg);
        if (json)
            os << to_json(rec) << "\n";
        else
            print_human(os, rec);
    } catch (const NotFundamentalError& e) {
        std::cerr << "not a fundamental discriminant: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int cmd_table(long long from, long long to, bool json, const NumericsConfig& cfg,
              const std::string& out_file) {
    std::vector<long long> discs;
    for (long long D = from; D <= to; ++D)
        if (is_fundamental(D)) discs.push_back(D);

    // independent per-discriminant work, deterministic slot-indexed output
    std::vector<std::optional<AnalysisRecord>> recs(discs.size());
    std::vector<std::string> errors(discs.size());
    std::atomic<size_t> cursor{0};
    unsigned n_threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    auto worker = [&]() {
        for (size_t i = cursor.fetch_add(1); i < discs.size(); i = cursor.fetch_add(1)) {
            try {
                recs[i] = analyze(discs[i], cfg);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ofstream file;
    std::ostream& os = open_sink(out_file, file);
    int rc = 0;
    if (json) {
        os << "[";
        bool first = true;
        for (size_t i = 0; i < discs.size(); ++i) {
            if (!recs[i]) continue;
            if (!first) os << ",\n ";
            first = false;
            os << to_json(*recs[i]);
        }
        os << "]\n";
    } else {
        os << csv_header() << "\n";
        for (size_t i = 0; i < discs.size(); ++i) {
            if (!recs[i]) continue;
            for (const auto& row : to_csv_rows(*recs[i])) os << row << "\n";
        }
    }
    for (size_t i = 0; i < discs.size(); ++i) {
        if (!recs[i]) {
            std::cerr << "D=" << discs[i] << ": " << errors[i] << "\n";
            rc = 3;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplest Hecke characters of imaginary quadratic fields: root numbers, central "
                 "L-values and derivatives, vanishing orders"};
    app.require_subcommand(1);

    long long disc = 0, from = 3, to = 100;
    std::optional<double> tol_flag;
    long long max_terms = 200'000'000;
    bool json = false, csv = false;
    std::string out_file, only;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one discriminant");
    analyze_cmd->add_option("--disc", disc, "positive D with -D fundamental")->required();
    analyze_cmd->add_flag("--json", json, "machine-readable JSON output");
    analyze_cmd->add_option("--tol", tol_flag, "target absolute error for series");
    analyze_cmd->add_option("--max-terms", max_terms, "guard on total summed terms");
    analyze_cmd->add_option("--out", out_file, "write output to a file");

    auto* table_cmd = app.add_subcommand("table", "one CSV row per (fundamental D, character)");
    table_cmd->add_option("--from", from, "lower bound for D")->required();
    table_cmd->add_option("--to", to, "upper bound for D")->required();
    table_cmd->add_flag("--json", json, "emit a JSON array instead of CSV");
    table_cmd->add_flag("--csv", csv, "emit CSV (the default)");
    table_cmd->add_option("--tol", tol_flag, "target absolute error for series");
    table_cmd->add_option("--max-terms", max_terms, "guard on total summed terms");
    table_cmd->add_option("--out", out_file, "write output to a file");

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("--only", only, "run a single criterion");
    verify_cmd->add_option("--tol", tol_flag, "loosen numeric tolerances uniformly");
    verify_cmd->add_option("--max-terms", max_terms, "guard on total summed terms");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(verify_cmd)) {
        VerifyOptions opt;
        opt.tol_floor = resolve_tol(tol_flag, 0.0);
        opt.only = only;
        opt.max_terms = max_terms;
        return run_verification(opt, std::cout);
    }

    NumericsConfig cfg;
    cfg.target_abs_error = resolve_tol(tol_flag, cfg.target_abs_error);
    cfg.max_terms = max_terms;

    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(disc, json, cfg, out_file);

    if (from < 3 || from > to || to > 10000) {
        std::cerr << "need 3 <= from <= to <= 10000\n";
        return 1;
    }
    return cmd_table(from, to, json, cfg, out_file);
}
