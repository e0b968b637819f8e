// medbounds CLI: nonparametric bounds for two-mediator decomposition effects.
//
// Subcommands: bounds, verify, vertices, simulate, bootstrap. Every randomized
// command requires an explicit --seed; repeated invocations with the same
// arguments produce byte-identical machine output regardless of --threads.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "medbounds/bootstrap.hpp"
#include "medbounds/bounds.hpp"
#include "medbounds/errors.hpp"
#include "medbounds/io.hpp"
#include "medbounds/lp.hpp"
#include "medbounds/parallel.hpp"
#include "medbounds/rng.hpp"
#include "medbounds/simulate.hpp"

namespace {

using namespace medbounds;

const std::vector<EstimandId> kClosedFormEstimands = {
    EstimandId::cde(0, 0),      EstimandId::cde(0, 1),  EstimandId::cde(1, 0),
    EstimandId::cde(1, 1),      EstimandId::nde(0, 0, 0), EstimandId::jnie(1),
    EstimandId::ms2nie1(1, 1),  EstimandId::nie2(1, 0, 0),
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MalformedInput("cannot write '" + path + "'");
    out << text;
}

void emit_json(const std::string& path, const nlohmann::json& doc) {
    write_text(path, doc.dump(2) + "\n");
}

std::string derived_summary_path(const std::string& rows_path) {
    const auto dot = rows_path.rfind('.');
    if (dot == std::string::npos) return rows_path + "_summary";
    return rows_path.substr(0, dot) + "_summary" + rows_path.substr(dot);
}

std::vector<EstimandId> parse_estimand_list(const std::string& csv) {
    std::vector<EstimandId> out;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (!name.empty()) out.push_back(EstimandId::parse(name));
    }
    if (out.empty()) throw UnknownEstimand("empty estimand list");
    return out;
}

int run_bounds(const std::string& input, const std::string& estimand_name,
               const std::string& method, const std::string& out_path, bool human,
               int threads) {
    (void)threads;
    const EstimandId e = EstimandId::parse(estimand_name);
    const ObservedDistribution dist = validate(read_distribution_any(input));

    const auto emit_one = [&](const BoundInterval& interval) {
        if (human) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s [%s]: lower %.4f, upper %.4f%s\n",
                          e.name().c_str(), to_string(interval.method).c_str(), interval.lower,
                          interval.upper, interval.noninformative() ? " (noninformative)" : "");
            write_text(out_path, buf);
        } else if (ends_with(out_path, ".csv")) {
            write_text(out_path, bound_report_csv(e, interval));
        } else {
            emit_json(out_path, bound_report(e, interval));
        }
    };

    if (method == "closed") {
        emit_one(closed_form_bounds(dist, e));
    } else if (method == "lp") {
        emit_one(sharp_bounds_lp(dist, e));
    } else if (method == "auto") {
        emit_one(has_closed_form(e) ? closed_form_bounds(dist, e) : sharp_bounds_lp(dist, e));
    } else {  // both
        const BoundInterval closed = closed_form_bounds(dist, e);
        const BoundInterval lp = sharp_bounds_lp(dist, e);
        const double diff = std::max(std::abs(closed.lower - lp.lower),
                                     std::abs(closed.upper - lp.upper));
        if (human) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "%s: closed-form (%.4f, %.4f), lp (%.4f, %.4f), max diff %.2e\n",
                          e.name().c_str(), closed.lower, closed.upper, lp.lower, lp.upper, diff);
            write_text(out_path, buf);
        } else {
            emit_json(out_path, nlohmann::json{{"estimand", e.name()},
                                               {"closed_form", bound_report(e, closed)},
                                               {"lp", bound_report(e, lp)},
                                               {"max_abs_difference", diff}});
        }
    }
    return 0;
}

int run_verify(int samples, std::uint64_t seed, double tolerance, const std::string& out_path,
               int threads) {
    std::vector<double> per_sample_max(static_cast<std::size_t>(samples), 0.0);
    nlohmann::json per_estimand = nlohmann::json::object();
    std::vector<double> est_max(kClosedFormEstimands.size(), 0.0);
    std::vector<std::vector<double>> sample_est(
        static_cast<std::size_t>(samples), std::vector<double>(kClosedFormEstimands.size(), 0.0));

    parallel_for(samples, default_thread_count(threads), [&](std::int64_t i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const CounterfactualDistribution q(dirichlet_symmetric(rng, 1.0, kTypeCount));
        const ObservedDistribution dist = implied_observed(q);
        for (std::size_t k = 0; k < kClosedFormEstimands.size(); ++k) {
            const EstimandId e = kClosedFormEstimands[k];
            const BoundInterval closed = closed_form_bounds(dist, e);
            const BoundInterval lp = sharp_bounds_lp(dist, e);
            sample_est[static_cast<std::size_t>(i)][k] =
                std::max(std::abs(closed.lower - lp.lower), std::abs(closed.upper - lp.upper));
        }
    });
    double overall = 0.0;
    for (int i = 0; i < samples; ++i)
        for (std::size_t k = 0; k < kClosedFormEstimands.size(); ++k) {
            est_max[k] = std::max(est_max[k], sample_est[static_cast<std::size_t>(i)][k]);
            overall = std::max(overall, est_max[k]);
        }
    for (std::size_t k = 0; k < kClosedFormEstimands.size(); ++k)
        per_estimand[kClosedFormEstimands[k].name()] = est_max[k];

    const bool pass = overall <= tolerance;
    emit_json(out_path, nlohmann::json{{"samples", samples},
                                       {"seed", seed},
                                       {"tolerance", tolerance},
                                       {"max_abs_difference", overall},
                                       {"per_estimand", per_estimand},
                                       {"pass", pass}});
    return pass ? 0 : 1;
}

int run_vertices(const std::string& estimand_name, const std::string& out_path, bool cross_check,
                 int threads) {
    const EstimandId e = EstimandId::parse(estimand_name);
    const VertexSweepResult result = vertex_sweep(e, threads, cross_check);
    if (ends_with(out_path, ".csv")) {
        std::ostringstream csv;
        write_vertex_sweep_csv(csv, result.table);
        write_text(out_path, csv.str());
    } else {
        nlohmann::json cells = nlohmann::json::array();
        long total = 0;
        for (const auto& [cell, count] : result.table) {
            cells.push_back({{"lower", cell.first},
                             {"upper", cell.second},
                             {"count", count},
                             {"proportion", static_cast<double>(count) / kTypeCount}});
            total += count;
        }
        nlohmann::json doc{{"estimand", e.name()}, {"cells", cells}, {"total", total}};
        if (cross_check) doc["cross_check_max_diff"] = result.cross_check_max_diff;
        emit_json(out_path, doc);
    }
    if (cross_check && result.cross_check_max_diff > 1e-7) return 1;
    return 0;
}

int run_simulate(const std::string& alphas_csv, int n, std::uint64_t seed,
                 const std::string& estimands_csv, const std::string& out_path,
                 std::string summary_path, int threads) {
    SimulationConfig config;
    {
        std::stringstream ss(alphas_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) config.alpha_levels.push_back(std::stod(tok));
    }
    config.n_per_level = n;
    config.seed = seed;
    config.estimands = parse_estimand_list(estimands_csv);
    config.threads = threads;
    const StudyResult result = dirichlet_study(config);

    if (out_path.empty() || ends_with(out_path, ".json")) {
        nlohmann::json rows = nlohmann::json::array();
        for (const StudyRow& row : result.rows)
            rows.push_back({{"alpha", row.alpha},
                            {"replicate", row.replicate},
                            {"estimand", row.estimand.name()},
                            {"lower", row.lower},
                            {"upper", row.upper},
                            {"width", row.width},
                            {"excludes_zero", row.excludes_zero}});
        nlohmann::json summary = nlohmann::json::array();
        for (const StudySummaryRow& row : result.summary)
            summary.push_back({{"alpha", row.alpha},
                               {"estimand", row.estimand.name()},
                               {"prop_width_lt_1", row.prop_width_lt_1},
                               {"prop_excludes_zero", row.prop_excludes_zero},
                               {"ci_low", row.ci_low},
                               {"ci_high", row.ci_high}});
        emit_json(out_path, nlohmann::json{{"rows", rows},
                                           {"summary", summary},
                                           {"redraws", result.redraws}});
        return 0;
    }
    std::ostringstream rows_csv;
    write_study_rows_csv(rows_csv, result.rows);
    write_text(out_path, rows_csv.str());
    if (summary_path.empty()) summary_path = derived_summary_path(out_path);
    std::ostringstream summary_csv;
    write_study_summary_csv(summary_csv, result.summary);
    write_text(summary_path, summary_csv.str());
    return 0;
}

int run_bootstrap(const std::string& input, const std::string& estimand_name, int replicates,
                  std::uint64_t seed, double level, const std::string& method,
                  const std::string& out_path, int threads) {
    const EstimandId e = EstimandId::parse(estimand_name);
    const RecordTable records = read_records_csv_file(input);
    BootstrapConfig config;
    config.replicates = replicates;
    config.level = level;
    config.seed = seed;
    config.threads = threads;
    const BoundsPath path = method == "closed" ? BoundsPath::ClosedForm
                            : method == "lp"   ? BoundsPath::Lp
                                               : BoundsPath::Auto;
    const BootstrapResult result = bootstrap_bounds(records, e, config, path);
    if (ends_with(out_path, ".csv")) {
        std::ostringstream csv;
        csv << "estimand,method,lower,upper,ci_lower_low,ci_lower_high,ci_upper_low,"
               "ci_upper_high,replicates,level,seed\n";
        csv << e.name() << ',' << to_string(result.point.method) << ','
            << format_double(result.point.lower) << ',' << format_double(result.point.upper)
            << ',' << format_double(result.ci_lower.first) << ','
            << format_double(result.ci_lower.second) << ','
            << format_double(result.ci_upper.first) << ','
            << format_double(result.ci_upper.second) << ',' << result.replicates << ','
            << format_double(result.level) << ',' << result.seed << '\n';
        write_text(out_path, csv.str());
    } else {
        emit_json(out_path, bootstrap_report(e, result));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp nonparametric bounds for decomposition effects with two binary mediators"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (default: MEDBOUNDS_THREADS or all cores)");

    std::string input, estimand, method = "auto", out_path, alphas, summary_path;
    std::string estimands = "NDE-000,JNIE-1,MS2NIE1-11,NIE2-100";
    std::uint64_t seed = 0;
    int samples = 200, n = 1000, replicates = 2000;
    double tolerance = 1e-7, level = 0.95;
    bool human = false, cross_check = false;

    CLI::App* bounds = app.add_subcommand("bounds", "bound one estimand for an observed dataset");
    bounds->add_option("--input", input, "record CSV or probability JSON")->required();
    bounds->add_option("--estimand", estimand, "estimand name, e.g. NDE-000")->required();
    bounds->add_option("--method", method, "closed | lp | both | auto")
        ->check(CLI::IsMember({"closed", "lp", "both", "auto"}));
    bounds->add_option("--out", out_path, "output file (.json/.csv); default stdout JSON");
    bounds->add_flag("--human", human, "4-decimal text instead of machine output");

    CLI::App* verify = app.add_subcommand("verify", "closed-form vs LP equivalence sweep");
    verify->add_option("--samples", samples, "number of Dirichlet(1) distributions");
    verify->add_option("--seed", seed, "RNG seed")->required();
    verify->add_option("--tolerance", tolerance, "max allowed |closed - lp|");
    verify->add_option("--out", out_path, "output file; default stdout JSON");

    CLI::App* vertices = app.add_subcommand("vertices", "bound tabulation over all 16,384 vertex distributions");
    vertices->add_option("--estimand", estimand, "estimand name")->required();
    vertices->add_option("--out", out_path, "output file (.json/.csv); default stdout JSON");
    vertices->add_flag("--cross-check", cross_check, "also run the LP on closed-form estimands");

    CLI::App* simulate = app.add_subcommand("simulate", "symmetric-Dirichlet width / zero-exclusion study");
    simulate->add_option("--alphas", alphas, "comma-separated Dirichlet parameters")->required();
    simulate->add_option("--n", n, "replicates per alpha level");
    simulate->add_option("--seed", seed, "RNG seed")->required();
    simulate->add_option("--estimands", estimands, "comma-separated estimand names");
    simulate->add_option("--out", out_path, "rows CSV (or .json for a combined document)");
    simulate->add_option("--summary-out", summary_path, "summary CSV (default: derived from --out)");

    CLI::App* bootstrap = app.add_subcommand("bootstrap", "percentile bootstrap for estimated bounds");
    bootstrap->add_option("--input", input, "record CSV")->required();
    bootstrap->add_option("--estimand", estimand, "estimand name")->required();
    bootstrap->add_option("--replicates", replicates, "bootstrap replicates");
    bootstrap->add_option("--seed", seed, "RNG seed")->required();
    bootstrap->add_option("--level", level, "coverage level in (0,1)");
    bootstrap->add_option("--method", method, "closed | lp | auto")
        ->check(CLI::IsMember({"closed", "lp", "auto"}));
    bootstrap->add_option("--out", out_path, "output file (.json/.csv); default stdout JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(bounds))
            return run_bounds(input, estimand, method, out_path, human, threads);
        if (app.got_subcommand(verify))
            return run_verify(samples, seed, tolerance, out_path, threads);
        if (app.got_subcommand(vertices))
            return run_vertices(estimand, out_path, cross_check, threads);
        if (app.got_subcommand(simulate))
            return run_simulate(alphas, n, seed, estimands, out_path, summary_path, threads);
        if (app.got_subcommand(bootstrap))
            return run_bootstrap(input, estimand, replicates, seed, level, method, out_path,
                                 threads);
    } catch (const medbounds::Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
