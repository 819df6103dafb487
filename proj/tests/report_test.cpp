#include "csieve/sweep.hpp"

#include <filesystem>

#include "test_support.hpp"

using csieve::json;
using csieve::Partition;
using csieve::ReportEnvelope;
using csieve::SweepConfig;

namespace {

SweepConfig counterexample_config() {
    SweepConfig config;
    config.family = SweepConfig::Family::explicit_list;
    config.shapes = {Partition({2, 1, 1, 1})};
    config.n_min = 5;
    config.n_max = 5;
    config.checks = {"csp-principal", "csp-staircase"};
    config.cache_dir = (std::filesystem::temp_directory_path() / "csieve-report-test").string();
    return config;
}

const json* find_case(const ReportEnvelope& envelope, const std::string& check) {
    for (const json& record : envelope.cases) {
        if (record.at("check") == check) return &record;
    }
    return nullptr;
}

}  // namespace

int main() {
    // config round trip
    SweepConfig config = counterexample_config();
    config.expectations = {{"csp-principal", false}, {"csp-staircase", true}};
    SweepConfig back = SweepConfig::from_json(config.to_json());
    CHECK(back.to_json() == config.to_json());
    CHECK(back.shapes == config.shapes);
    CHECK(back.checks == config.checks);
    CHECK(back.expectations == config.expectations);

    // the counterexample sweep: principal fails, staircase passes
    ReportEnvelope envelope = csieve::run_sweep(config);
    CHECK(envelope.cases.size() == 2);
    const json* principal = find_case(envelope, "csp-principal");
    const json* staircase = find_case(envelope, "csp-staircase");
    CHECK(principal && !principal->at("verdict").get<bool>());
    CHECK(staircase && staircase->at("verdict").get<bool>());
    CHECK(envelope.summary.at("ok") == 2);
    CHECK(envelope.unexpected() == 0);  // both verdicts were declared

    // flipping an expectation makes the run "unexpected"
    SweepConfig flipped = config;
    flipped.expectations["csp-principal"] = true;
    CHECK(csieve::run_sweep(flipped).unexpected() == 1);

    // report round trip: parse(emit(report)) = report
    ReportEnvelope parsed = ReportEnvelope::parse(envelope.to_ndjson());
    CHECK(parsed.header == envelope.header);
    CHECK(parsed.summary == envelope.summary);
    CHECK(ReportEnvelope::same_content(parsed, envelope));

    // sweep determinism: same verdicts and evidence at any parallelism
    SweepConfig wide = config;
    wide.checks = {"free-orbits", "csp-principal", "pr-orders", "pr2-commutation"};
    wide.family = SweepConfig::Family::all_of_size;
    wide.shapes.clear();
    wide.size_max = 4;
    wide.n_min = 2;
    wide.n_max = 4;
    wide.jobs = 1;
    ReportEnvelope serial = csieve::run_sweep(wide);
    wide.jobs = 3;
    ReportEnvelope parallel = csieve::run_sweep(wide);
    ReportEnvelope reserial = serial;
    reserial.header = parallel.header;  // configs differ only in the jobs echo
    CHECK(ReportEnvelope::same_content(reserial, parallel));

    // family selectors
    SweepConfig hooks = wide;
    hooks.family = SweepConfig::Family::hooks;
    for (const Partition& shape : hooks.shape_list()) CHECK(shape.is_hook());
    SweepConfig cols = wide;
    cols.family = SweepConfig::Family::two_column;
    for (const Partition& shape : cols.shape_list()) CHECK(shape.is_two_column());

    // precondition failures are recorded, never abort the sweep
    SweepConfig mixed;
    mixed.family = SweepConfig::Family::explicit_list;
    mixed.shapes = {Partition({2, 1, 1, 1})};
    mixed.n_min = 5;
    mixed.n_max = 5;
    mixed.checks = {"free-orbits", "bicsp", "csp-staircase"};
    mixed.cache_dir = config.cache_dir;
    ReportEnvelope mixed_report = csieve::run_sweep(mixed);
    CHECK(mixed_report.summary.at("precondition") == 2);  // gcd and non-hook
    CHECK(mixed_report.summary.at("ok") == 1);
    // a tiny cap is recorded per case, sweep continues
    SweepConfig capped = mixed;
    capped.checks = {"csp-staircase"};
    capped.cap = 3;
    ReportEnvelope capped_report = csieve::run_sweep(capped);
    CHECK(capped_report.summary.at("cap_exceeded") == 1);

    // promotion-order sweep record carries the exact order
    SweepConfig orders_config;
    orders_config.shapes = {Partition({2, 2, 2, 1})};
    orders_config.n_min = orders_config.n_max = 6;
    orders_config.checks = {"pr-orders"};
    orders_config.cache_dir = config.cache_dir;
    ReportEnvelope orders_report = csieve::run_sweep(orders_config);
    CHECK(orders_report.cases.size() == 1);
    CHECK(orders_report.cases[0].at("order_pr") == 36);
    CHECK(orders_report.cases[0].at("order_prn") == 6);

    // hooks sweep: every bicyclic verdict in range comes out true
    SweepConfig hook_sweep;
    hook_sweep.family = SweepConfig::Family::hooks;
    hook_sweep.size_max = 6;
    hook_sweep.n_min = 1;
    hook_sweep.n_max = 6;
    hook_sweep.coprime_only = true;
    hook_sweep.checks = {"bicsp"};
    hook_sweep.expectations = {{"bicsp", true}};
    hook_sweep.jobs = 2;
    hook_sweep.cache_dir = config.cache_dir;
    ReportEnvelope hook_report = csieve::run_sweep(hook_sweep);
    CHECK(hook_report.unexpected() == 0);
    CHECK(hook_report.summary.at("ok").get<long long>() > 10);

    // bad configs are usage errors
    bool threw = false;
    try {
        SweepConfig bad = config;
        bad.checks = {"no-such-check"};
        csieve::run_sweep(bad);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
    threw = false;
    try {
        SweepConfig bad = config;
        bad.n_min = 3;
        bad.n_max = 2;
        csieve::run_sweep(bad);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);

    // single-tableau operator driver
    CHECK(csieve::show_tableau_op("1 1 2/3 3 4/4", 4, "promote", false, 1) ==
          "1 1 3\n2 2 4\n4\n");
    CHECK(csieve::show_tableau_op("1 2/2", 3, "f:2", false, 1) == "1 3\n2\n");
    std::string via_f_then_pr = csieve::show_tableau_op("1 3/2", 3, "promote", false, 2);
    CHECK(via_f_then_pr == "1 3\n2\n");  // pr^2 . f_2 on (1 2 / 2)
    CHECK(csieve::show_tableau_op("1 1 2/3 3 4/4", 4, "c", false, 4) == "1 1 2\n3 3 4\n4\n");
    std::string framed = csieve::show_tableau_op("1 1 2/3 3 4/4", 4, "promote", true, 1);
    CHECK(framed.find("3 3 .") != std::string::npos);   // dotted start
    CHECK(framed.find(". . 2") != std::string::npos);   // after the second slide
    CHECK(csieve::show_tableau_op("2 2", 2, "f:1", false, 1) == "null\n");

    std::filesystem::remove_all(config.cache_dir);
    return test_summary("report_test");
}
