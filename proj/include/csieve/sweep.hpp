#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "csieve/enumerate.hpp"
#include "csieve/partition.hpp"

namespace csieve {

using json = nlohmann::ordered_json;

// Which verifications a sweep runs per (shape, n) case.
const std::vector<std::string>& known_checks();

// Case grid and execution knobs for a verification sweep. Shapes come
// from an explicit list or from one of three families; n ranges over
// [n_min, n_max], optionally filtered to gcd(n, |shape|) = 1.
struct SweepConfig {
    enum class Family { explicit_list, all_of_size, hooks, two_column };

    Family family = Family::explicit_list;
    std::vector<Partition> shapes;  // explicit_list
    int size_max = 0;               // families: max |shape|

    int n_min = 1;
    int n_max = 1;
    bool coprime_only = false;

    std::vector<std::string> checks;
    long long cap = kDefaultCap;
    int jobs = 1;
    std::map<std::string, bool> expectations;  // optional expected verdict per check
    std::string cache_dir;                     // Kostka cache location; "" = default

    json to_json() const;
    static SweepConfig from_json(const json& j);

    std::vector<Partition> shape_list() const;  // resolved family, sorted
};

// Sweep output: a header object, one record per case, and a summary.
// Serialized as line-delimited JSON; identical configs reproduce
// identical content except for the per-case "ms" timings.
struct ReportEnvelope {
    json header;              // tool, version, config
    std::vector<json> cases;  // stable order: (shape, n, check) as generated
    json summary;

    std::string to_ndjson() const;
    static ReportEnvelope parse(const std::string& text);

    long long unexpected() const;  // cases whose verdict missed a declared expectation

    // Equality with "ms" fields ignored.
    static bool same_content(const ReportEnvelope& a, const ReportEnvelope& b);
};

// Runs every selected check over the case grid. Per-case precondition
// failures and cap overruns are recorded and the sweep continues.
ReportEnvelope run_sweep(const SweepConfig& config);

// One-shot tableau operator for the command line: op is one of
// "promote", "bk:i", "s:i", "e:i", "f:i", "c". Partial operators print
// "null" when undefined. promote can also report its slide frames.
std::string show_tableau_op(const std::string& tableau_text, int n, const std::string& op,
                            bool frames, int times);

}  // namespace csieve
