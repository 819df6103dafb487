// Command-line front end: verification sweeps, single-case sieving
// checks, tableau operator application, promotion order reports, and
// Kostka cache maintenance. Reports are line-delimited JSON so runs
// diff cleanly.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"

#include "csieve/crystal.hpp"
#include "csieve/kostka_cache.hpp"
#include "csieve/promotion.hpp"
#include "csieve/qpolynomials.hpp"
#include "csieve/sieving.hpp"
#include "csieve/sweep.hpp"
#include "csieve/version.hpp"

namespace {

using csieve::json;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int run_sweep_command(const csieve::SweepConfig& config, const std::string& out_path) {
    csieve::ReportEnvelope envelope = csieve::run_sweep(config);
    write_output(envelope.to_ndjson(), out_path);
    return envelope.unexpected() == 0 ? 0 : 1;
}

// Tableaux still exist at length(shape) = n, but the theorems assume
// length(shape) < n; worth a note, not a refusal.
void warn_full_length(const csieve::Partition& shape, int n) {
    if (shape.length() == n) {
        std::cerr << "note: length(shape) = n; theorem hypotheses assume length < n\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crystal/promotion sieving checks on semistandard tableaux"};
    app.set_version_flag("--version", csieve::kVersion);
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run checks over a (shape, n) grid");
    std::vector<std::string> shape_texts;
    std::string family = "list";
    int size_max = 0;
    int n_value = 0, n_max_value = 0;
    bool coprime_only = false;
    std::vector<std::string> checks;
    long long cap = csieve::kDefaultCap;
    int jobs = 1;
    std::string out_path, cache_dir, config_path;
    std::vector<std::string> expect_texts;
    sweep->add_option("--shape", shape_texts, "explicit shape, e.g. 2,1 (repeatable)");
    sweep->add_option("--family", family, "shape family: list|all|hooks|two-column");
    sweep->add_option("--size-max", size_max, "max |shape| for family sweeps");
    sweep->add_option("--n", n_value, "single n, or lower end with --n-max");
    sweep->add_option("--n-max", n_max_value, "upper end of the n range");
    sweep->add_flag("--coprime-only", coprime_only, "keep only gcd(n,|shape|)=1 cases");
    sweep->add_option("--checks", checks, "checks to run")->delimiter(',');
    sweep->add_option("--cap", cap, "tableau cardinality cap per case");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--out", out_path, "write the report here instead of stdout");
    sweep->add_option("--cache-dir", cache_dir, "Kostka cache directory");
    sweep->add_option("--expect", expect_texts, "declare check=verdict, e.g. bicsp=true");
    sweep->add_option("--config", config_path, "JSON config file; flags override");

    // ---- tableau ----
    auto* tableau = app.add_subcommand("tableau", "apply an operator to one tableau");
    std::string tableau_text, op;
    int tableau_n = 0, times = 1;
    bool frames = false;
    tableau->add_option("--t", tableau_text, "tableau, rows separated by '/'")->required();
    tableau->add_option("--n", tableau_n, "alphabet bound")->required();
    tableau->add_option("--op", op, "promote | bk:i | s:i | e:i | f:i | c")->required();
    tableau->add_option("--times", times, "apply the operator repeatedly");
    tableau->add_flag("--frames", frames, "print the dot-slide frames of promote");

    // ---- csp ----
    auto* csp = app.add_subcommand("csp", "cyclic sieving check for one shape");
    std::string csp_shape, csp_poly = "principal", csp_alpha;
    int csp_n = 0;
    long long csp_cap = csieve::kDefaultCap;
    std::string csp_out;
    csp->add_option("--shape", csp_shape, "partition, e.g. 2,1,1,1")->required();
    csp->add_option("--n", csp_n, "alphabet bound")->required();
    csp->add_option("--poly", csp_poly, "principal | staircase");
    csp->add_option("--alpha", csp_alpha,
                    "content class: run the pr^n content-class check instead");
    csp->add_option("--cap", csp_cap, "tableau cardinality cap");
    csp->add_option("--out", csp_out, "write the report here instead of stdout");

    // ---- bicsp ----
    auto* bicsp = app.add_subcommand("bicsp", "bicyclic sieving check for a hook shape");
    std::string bicsp_shape, bicsp_out, bicsp_cache;
    int bicsp_n = 0;
    long long bicsp_cap = csieve::kDefaultCap;
    bicsp->add_option("--shape", bicsp_shape, "hook partition, e.g. 2,1")->required();
    bicsp->add_option("--n", bicsp_n, "alphabet bound")->required();
    bicsp->add_option("--cap", bicsp_cap, "tableau cardinality cap");
    bicsp->add_option("--cache-dir", bicsp_cache, "Kostka cache directory");
    bicsp->add_option("--out", bicsp_out, "write the report here instead of stdout");

    // ---- orders ----
    auto* orders = app.add_subcommand("orders", "promotion orders for one shape");
    std::string orders_shape, orders_out;
    int orders_n = 0;
    long long orders_cap = csieve::kDefaultCap;
    orders->add_option("--shape", orders_shape, "partition")->required();
    orders->add_option("--n", orders_n, "alphabet bound")->required();
    orders->add_option("--cap", orders_cap, "tableau cardinality cap");
    orders->add_option("--out", orders_out, "write the report here instead of stdout");

    // ---- cache ----
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the Kostka cache");
    std::string cache_action = "inspect", cache_dir_opt;
    cache_cmd->add_option("action", cache_action, "inspect | clear");
    cache_cmd->add_option("--cache-dir", cache_dir_opt, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            csieve::SweepConfig config;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::runtime_error("cannot read config: " + config_path);
                config = csieve::SweepConfig::from_json(json::parse(in));
            }
            if (!shape_texts.empty()) {
                config.family = csieve::SweepConfig::Family::explicit_list;
                config.shapes.clear();
                for (const std::string& text : shape_texts) {
                    config.shapes.push_back(csieve::Partition::parse(text));
                }
            }
            if (sweep->count("--family")) {
                if (family == "all") config.family = csieve::SweepConfig::Family::all_of_size;
                else if (family == "hooks") config.family = csieve::SweepConfig::Family::hooks;
                else if (family == "two-column")
                    config.family = csieve::SweepConfig::Family::two_column;
                else if (family == "list")
                    config.family = csieve::SweepConfig::Family::explicit_list;
                else throw std::runtime_error("unknown family: " + family);
            }
            if (sweep->count("--size-max")) config.size_max = size_max;
            if (sweep->count("--n")) config.n_min = n_value;
            if (sweep->count("--n-max")) config.n_max = n_max_value;
            else if (sweep->count("--n")) config.n_max = n_value;
            if (sweep->count("--coprime-only")) config.coprime_only = true;
            if (!checks.empty()) config.checks = checks;
            if (sweep->count("--cap")) config.cap = cap;
            if (sweep->count("--jobs")) config.jobs = jobs;
            if (sweep->count("--cache-dir")) config.cache_dir = cache_dir;
            for (const std::string& text : expect_texts) {
                std::size_t eq = text.find('=');
                if (eq == std::string::npos) {
                    throw std::runtime_error("bad --expect, use check=true|false");
                }
                config.expectations[text.substr(0, eq)] = text.substr(eq + 1) == "true";
            }
            if (config.checks.empty()) config.checks = csieve::known_checks();
            return run_sweep_command(config, out_path);
        }

        if (tableau->parsed()) {
            std::cout << csieve::show_tableau_op(tableau_text, tableau_n, op, frames, times);
            return 0;
        }

        if (csp->parsed()) {
            csieve::Partition shape = csieve::Partition::parse(csp_shape);
            warn_full_length(shape, csp_n);
            json record = json::object();
            record["shape"] = shape.to_string();
            record["n"] = csp_n;
            if (!csp_alpha.empty()) {
                // comma-separated counts, padded with zeros to length n
                csieve::Content alpha(static_cast<std::size_t>(csp_n), 0);
                std::istringstream text(csp_alpha);
                std::string token;
                std::size_t i = 0;
                while (std::getline(text, token, ',')) {
                    if (i >= alpha.size()) {
                        throw std::invalid_argument("content longer than n");
                    }
                    int value = std::stoi(token);
                    if (value < 0) throw std::invalid_argument("negative content entry");
                    alpha[i++] = value;
                }
                csieve::ContentClassReport report =
                    csieve::verify_csp_content_class(shape, csp_n, alpha, csp_cap);
                record["alpha"] = csieve::content_to_string(alpha);
                record["precondition_ok"] = report.precondition_ok;
                if (!report.precondition_ok) {
                    record["note"] = report.note;
                } else {
                    record["verdict"] = report.verdict;
                    record["closed_form_order"] = report.closed_form_order;
                    record["actual_order"] = report.actual_order;
                    record["residue_poly"] = report.csp.residue_poly.to_string();
                    record["candidate_reduced"] = report.csp.candidate_reduced.to_string();
                }
                write_output(record.dump() + "\n", csp_out);
                return report.precondition_ok && report.verdict ? 0 : 1;
            }
            csieve::CyclicActionSpec spec = csieve::make_c_action(shape, csp_n, csp_cap);
            csieve::LaurentPoly f =
                csp_poly == "staircase"
                    ? csieve::schur_staircase(shape, csp_n, csp_cap)
                          .times_monomial(1, static_cast<int>(-shape.sigma()))
                    : csieve::schur_principal(shape, csp_n, csp_cap)
                          .times_monomial(1, static_cast<int>(-shape.kappa()));
            csieve::SievingReport report = csieve::verify_csp(spec, f);
            record["poly"] = csp_poly;
            record["polynomial"] = f.to_string();
            record["verdict"] = report.verdict;
            record["routes_agree"] = report.routes_agree;
            record["residue_poly"] = report.residue_poly.to_string();
            record["candidate_reduced"] = report.candidate_reduced.to_string();
            json census = json::object();
            for (const auto& [size, count] : report.orbit_census) {
                census[std::to_string(size)] = count;
            }
            record["orbit_census"] = census;
            record["fixed_points"] = report.fixed_point_table;
            write_output(record.dump() + "\n", csp_out);
            return report.verdict ? 0 : 1;
        }

        if (bicsp->parsed()) {
            csieve::Partition shape = csieve::Partition::parse(bicsp_shape);
            warn_full_length(shape, bicsp_n);
            csieve::KostkaCache cache(bicsp_cache.empty()
                                          ? csieve::KostkaCache::default_path()
                                          : std::filesystem::path(bicsp_cache) /
                                                "kostka.cache");
            cache.load();
            csieve::BiSievingReport report =
                csieve::verify_bicsp_hook(shape, bicsp_n, bicsp_cap, &cache);
            cache.save();
            json record = json::object();
            record["shape"] = shape.to_string();
            record["n"] = bicsp_n;
            record["precondition_ok"] = report.precondition_ok;
            if (!report.precondition_ok) {
                record["note"] = report.note;
            } else {
                record["verdict"] = report.verdict;
                record["prn_order"] = report.prn_order;
                record["sieving_poly"] = report.sieving_poly.to_string();
                record["fixed_point_matrix"] = report.fixed_point_matrix;
                json evals = json::array();
                for (const auto& row : report.evaluation_matrix) {
                    json cells = json::array();
                    for (const auto& value : row) cells.push_back(value.to_string());
                    evals.push_back(cells);
                }
                record["evaluation_matrix"] = evals;
                record["matrix_matches"] = report.matrix_matches;
                record["t_one_slice_matches"] = report.t_one_slice_matches;
                record["zero_rows_for_nonzero_a"] = report.zero_rows_for_nonzero_a;
                record["pr_orbit_sizes_match"] = report.pr_orbit_sizes_match;
            }
            write_output(record.dump() + "\n", bicsp_out);
            return report.precondition_ok && report.verdict ? 0 : 1;
        }

        if (orders->parsed()) {
            csieve::Partition shape = csieve::Partition::parse(orders_shape);
            warn_full_length(shape, orders_n);
            csieve::OrderReport report = csieve::pr_orders(shape, orders_n, orders_cap);
            json record = json::object();
            record["shape"] = shape.to_string();
            record["n"] = orders_n;
            record["order_pr"] = report.total_order_pr;
            record["order_prn"] = report.total_order_prn;
            record["factored_formula_valid"] = report.factored_formula_valid;
            json per = json::object();
            for (const auto& [alpha, order] : report.per_content) {
                per[csieve::content_to_string(alpha)] = order;
            }
            record["per_content"] = per;
            write_output(record.dump() + "\n", orders_out);
            return 0;
        }

        if (cache_cmd->parsed()) {
            csieve::KostkaCache cache(cache_dir_opt.empty()
                                          ? csieve::KostkaCache::default_path()
                                          : std::filesystem::path(cache_dir_opt) /
                                                "kostka.cache");
            cache.load();
            if (cache_action == "inspect") {
                json record = json::object();
                record["file"] = cache.path().string();
                record["entries"] = static_cast<long long>(cache.size());
                std::cout << record.dump() << "\n";
            } else if (cache_action == "clear") {
                cache.clear();
                std::cout << R"({"cleared":true})" << "\n";
            } else {
                throw std::runtime_error("unknown cache action: " + cache_action);
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
