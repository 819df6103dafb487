#include "csieve/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "csieve/crystal.hpp"
#include "csieve/kostka_cache.hpp"
#include "csieve/promotion.hpp"
#include "csieve/qpolynomials.hpp"
#include "csieve/sieving.hpp"
#include "csieve/version.hpp"

namespace csieve {

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> checks = {
        "free-orbits",  "csp-principal",   "csp-staircase", "pr-orders",
        "pr2-commutation", "prn-commutation", "bicsp",
    };
    return checks;
}

namespace {

std::string family_name(SweepConfig::Family family) {
    switch (family) {
        case SweepConfig::Family::explicit_list: return "list";
        case SweepConfig::Family::all_of_size: return "all";
        case SweepConfig::Family::hooks: return "hooks";
        case SweepConfig::Family::two_column: return "two-column";
    }
    return "list";
}

SweepConfig::Family family_from_name(const std::string& name) {
    if (name == "list") return SweepConfig::Family::explicit_list;
    if (name == "all") return SweepConfig::Family::all_of_size;
    if (name == "hooks") return SweepConfig::Family::hooks;
    if (name == "two-column") return SweepConfig::Family::two_column;
    throw std::invalid_argument("unknown shape family: " + name);
}

json tableau_json(const Tableau& t) {
    return json(t.to_string());
}

json census_json(const std::map<int, long long>& census) {
    json out = json::object();
    for (const auto& [size, count] : census) out[std::to_string(size)] = count;
    return out;
}

json commutation_json(const CommutationReport& report) {
    json out = json::object();
    out["holds"] = report.holds;
    out["checked"] = report.checked;
    if (!report.holds) {
        out["index"] = report.index;
        out["counterexample"] = tableau_json(*report.counterexample);
        out["lhs"] = report.lhs ? tableau_json(*report.lhs) : json(nullptr);
        out["rhs"] = report.rhs ? tableau_json(*report.rhs) : json(nullptr);
    }
    return out;
}

json sieving_json(const SievingReport& report) {
    json out = json::object();
    out["verdict"] = report.verdict;
    out["routes_agree"] = report.routes_agree;
    out["orbit_census"] = json::object();
    for (const auto& [size, count] : report.orbit_census) {
        out["orbit_census"][std::to_string(size)] = count;
    }
    out["residue_poly"] = report.residue_poly.to_string();
    out["candidate_reduced"] = report.candidate_reduced.to_string();
    out["fixed_points"] = report.fixed_point_table;
    return out;
}

// One grid case: every check gets its own record so reports stay flat.
struct Case {
    Partition shape;
    int n;
    std::string check;
};

json run_case(const Case& c, const SweepConfig& config, KostkaCache* cache) {
    json record = json::object();
    record["shape"] = c.shape.to_string();
    record["n"] = c.n;
    record["check"] = c.check;
    auto started = std::chrono::steady_clock::now();
    try {
        if (c.check == "free-orbits") {
            FreeOrbitReport report = verify_free_orbits(c.shape, c.n, config.cap);
            if (!report.precondition_ok) {
                record["status"] = "precondition";
                record["note"] = report.note;
            } else {
                record["status"] = "ok";
                record["verdict"] = report.all_free;
            }
            record["orbit_census"] = census_json(report.orbit_census);
            record["free_orbits"] = report.free_orbits;
            record["fixed_points"] = report.fixed_points;
        } else if (c.check == "csp-principal" || c.check == "csp-staircase") {
            CyclicActionSpec spec = make_c_action(c.shape, c.n, config.cap);
            LaurentPoly f =
                c.check == "csp-principal"
                    ? schur_principal(c.shape, c.n, config.cap)
                          .times_monomial(1, static_cast<int>(-c.shape.kappa()))
                    : schur_staircase(c.shape, c.n, config.cap)
                          .times_monomial(1, static_cast<int>(-c.shape.sigma()));
            SievingReport report = verify_csp(spec, f);
            record["status"] = "ok";
            record["verdict"] = report.verdict;
            record["polynomial"] = f.to_string();
            record.update(sieving_json(report));
        } else if (c.check == "pr-orders") {
            OrderReport report = pr_orders(c.shape, c.n, config.cap);
            record["status"] = "ok";
            bool consistent = true;
            if (report.factored_formula_valid) {
                consistent = report.total_order_pr ==
                             static_cast<long long>(c.n) * report.total_order_prn;
            }
            record["verdict"] = consistent;
            record["order_pr"] = report.total_order_pr;
            record["order_prn"] = report.total_order_prn;
            record["factored_formula_valid"] = report.factored_formula_valid;
            json per = json::object();
            for (const auto& [alpha, order] : report.per_content) {
                per[content_to_string(alpha)] = order;
            }
            record["per_content"] = per;
        } else if (c.check == "pr2-commutation") {
            record["status"] = "ok";
            CommutationReport report = check_pr2_commutation(c.shape, c.n, config.cap);
            record["verdict"] = report.holds;
            record.update(commutation_json(report));
        } else if (c.check == "prn-commutation") {
            record["status"] = "ok";
            CommutationReport report = check_prn_si_commutation(c.shape, c.n, config.cap);
            record["verdict"] = report.holds;
            record.update(commutation_json(report));
        } else if (c.check == "bicsp") {
            BiSievingReport report = verify_bicsp_hook(c.shape, c.n, config.cap, cache);
            if (!report.precondition_ok) {
                record["status"] = "precondition";
                record["note"] = report.note;
            } else {
                record["status"] = "ok";
                record["verdict"] = report.verdict;
                record["prn_order"] = report.prn_order;
                record["matrix_matches"] = report.matrix_matches;
                record["t_one_slice_matches"] = report.t_one_slice_matches;
                record["zero_rows_for_nonzero_a"] = report.zero_rows_for_nonzero_a;
                record["pr_orbit_sizes_match"] = report.pr_orbit_sizes_match;
                record["fixed_point_matrix"] = report.fixed_point_matrix;
                json evals = json::array();
                for (const auto& row : report.evaluation_matrix) {
                    json cells = json::array();
                    for (const auto& value : row) cells.push_back(value.to_string());
                    evals.push_back(cells);
                }
                record["evaluation_matrix"] = evals;
                record["sieving_poly"] = report.sieving_poly.to_string();
            }
        } else {
            record["status"] = "error";
            record["note"] = "unknown check";
        }
    } catch (const CapExceeded& e) {
        record["status"] = "cap-exceeded";
        record["note"] = e.what();
    } catch (const std::exception& e) {
        record["status"] = "error";
        record["note"] = e.what();
    }
    auto elapsed = std::chrono::steady_clock::now() - started;
    record["ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return record;
}

json strip_ms(json value) {
    if (value.is_object()) value.erase("ms");
    return value;
}

}  // namespace

json SweepConfig::to_json() const {
    json j = json::object();
    j["family"] = family_name(family);
    json shape_texts = json::array();
    for (const Partition& p : shapes) shape_texts.push_back(p.to_string());
    j["shapes"] = shape_texts;
    j["size_max"] = size_max;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["coprime_only"] = coprime_only;
    j["checks"] = checks;
    j["cap"] = cap;
    j["jobs"] = jobs;
    j["expectations"] = expectations;
    j["cache_dir"] = cache_dir;
    return j;
}

SweepConfig SweepConfig::from_json(const json& j) {
    SweepConfig config;
    config.family = family_from_name(j.value("family", "list"));
    if (j.contains("shapes")) {
        for (const auto& text : j.at("shapes")) {
            config.shapes.push_back(Partition::parse(text.get<std::string>()));
        }
    }
    config.size_max = j.value("size_max", 0);
    config.n_min = j.value("n_min", 1);
    config.n_max = j.value("n_max", config.n_min);
    config.coprime_only = j.value("coprime_only", false);
    if (j.contains("checks")) {
        config.checks = j.at("checks").get<std::vector<std::string>>();
    }
    config.cap = j.value("cap", kDefaultCap);
    config.jobs = j.value("jobs", 1);
    if (j.contains("expectations")) {
        config.expectations =
            j.at("expectations").get<std::map<std::string, bool>>();
    }
    config.cache_dir = j.value("cache_dir", "");
    return config;
}

std::vector<Partition> SweepConfig::shape_list() const {
    std::vector<Partition> out;
    switch (family) {
        case Family::explicit_list:
            out = shapes;
            break;
        case Family::all_of_size:
            out = partitions_up_to(size_max);
            break;
        case Family::hooks:
            for (const Partition& p : partitions_up_to(size_max)) {
                if (p.is_hook()) out.push_back(p);
            }
            break;
        case Family::two_column:
            for (const Partition& p : partitions_up_to(size_max)) {
                if (p.is_two_column()) out.push_back(p);
            }
            break;
    }
    return out;
}

std::string ReportEnvelope::to_ndjson() const {
    std::string out = header.dump();
    out += '\n';
    for (const json& record : cases) {
        out += record.dump();
        out += '\n';
    }
    out += summary.dump();
    out += '\n';
    return out;
}

ReportEnvelope ReportEnvelope::parse(const std::string& text) {
    ReportEnvelope envelope;
    std::istringstream lines(text);
    std::string line;
    std::vector<json> parsed;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        parsed.push_back(json::parse(line));
    }
    if (parsed.size() < 2) throw std::invalid_argument("report too short");
    envelope.header = parsed.front();
    envelope.summary = parsed.back();
    envelope.cases.assign(parsed.begin() + 1, parsed.end() - 1);
    return envelope;
}

long long ReportEnvelope::unexpected() const {
    return summary.value("unexpected", 0LL);
}

bool ReportEnvelope::same_content(const ReportEnvelope& a, const ReportEnvelope& b) {
    if (a.header != b.header || a.summary != b.summary) return false;
    if (a.cases.size() != b.cases.size()) return false;
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        if (strip_ms(a.cases[i]) != strip_ms(b.cases[i])) return false;
    }
    return true;
}

ReportEnvelope run_sweep(const SweepConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min) {
        throw std::invalid_argument("empty n range");
    }
    if (config.cap < 1) throw std::invalid_argument("cap must be positive");
    if (config.jobs < 1) throw std::invalid_argument("jobs must be positive");
    for (const std::string& check : config.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), check) ==
            known_checks().end()) {
            throw std::invalid_argument("unknown check: " + check);
        }
    }

    // only bicsp consults the Kostka cache
    bool needs_cache = std::find(config.checks.begin(), config.checks.end(), "bicsp") !=
                       config.checks.end();
    KostkaCache cache(config.cache_dir.empty()
                          ? KostkaCache::default_path()
                          : std::filesystem::path(config.cache_dir) / "kostka.cache");
    if (needs_cache) cache.load();

    std::vector<Case> grid;
    for (const Partition& shape : config.shape_list()) {
        for (int n = config.n_min; n <= config.n_max; ++n) {
            if (shape.length() > n) continue;  // no tableaux at all
            if (config.coprime_only && std::gcd(n, shape.size()) != 1) continue;
            for (const std::string& check : config.checks) {
                grid.push_back(Case{shape, n, check});
            }
        }
    }

    std::vector<json> records(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t index = next.fetch_add(1);
            if (index >= grid.size()) return;
            records[index] = run_case(grid[index], config, &cache);
        }
    };
    if (config.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < config.jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (needs_cache) cache.save();

    ReportEnvelope envelope;
    envelope.header = json::object();
    envelope.header["tool"] = "csieve";
    envelope.header["version"] = kVersion;
    envelope.header["config"] = config.to_json();
    envelope.cases = std::move(records);

    long long ok = 0, precondition = 0, capped = 0, errors = 0, unexpected = 0;
    for (const json& record : envelope.cases) {
        std::string status = record.at("status").get<std::string>();
        if (status == "ok") {
            ++ok;
            auto expected = config.expectations.find(record.at("check").get<std::string>());
            if (expected != config.expectations.end() &&
                record.at("verdict").get<bool>() != expected->second) {
                ++unexpected;
            }
        } else if (status == "precondition") {
            ++precondition;
        } else if (status == "cap-exceeded") {
            ++capped;
        } else {
            ++errors;
        }
    }
    envelope.summary = json::object();
    envelope.summary["cases"] = static_cast<long long>(envelope.cases.size());
    envelope.summary["ok"] = ok;
    envelope.summary["precondition"] = precondition;
    envelope.summary["cap_exceeded"] = capped;
    envelope.summary["errors"] = errors;
    envelope.summary["unexpected"] = unexpected;
    return envelope;
}

std::string show_tableau_op(const std::string& tableau_text, int n, const std::string& op,
                            bool frames, int times) {
    Tableau t = Tableau::parse(tableau_text, n);
    if (times < 1) times = 1;
    std::string out;
    auto indexed = [&op]() {
        std::size_t colon = op.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("operator needs an index, e.g. s:2");
        }
        return std::stoi(op.substr(colon + 1));
    };
    for (int round = 0; round < times; ++round) {
        if (op == "promote") {
            std::vector<PromotionFrame> slide;
            Tableau image = promote(t, frames ? &slide : nullptr);
            if (frames) {
                for (const PromotionFrame& frame : slide) {
                    for (const auto& row : frame.grid) {
                        std::string line;
                        for (std::size_t c = 0; c < row.size(); ++c) {
                            if (c > 0) line += ' ';
                            line += row[c] == 0 ? "." : std::to_string(row[c]);
                        }
                        out += line + '\n';
                    }
                    out += "--\n";
                }
            }
            t = std::move(image);
        } else if (op == "c") {
            t = c_op(t);
        } else if (op.rfind("bk:", 0) == 0) {
            t = bender_knuth(t, indexed());
        } else if (op.rfind("s:", 0) == 0) {
            t = s_op(t, indexed());
        } else if (op.rfind("f:", 0) == 0) {
            auto image = f_op(t, indexed());
            if (!image) return out + "null\n";
            t = std::move(*image);
        } else if (op.rfind("e:", 0) == 0) {
            auto image = e_op(t, indexed());
            if (!image) return out + "null\n";
            t = std::move(*image);
        } else {
            throw std::invalid_argument("unknown tableau operator: " + op);
        }
    }
    out += t.to_string();
    out += '\n';
    return out;
}

}  // namespace csieve
