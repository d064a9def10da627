#ifndef MOLLY_CLI_SCENARIO_HPP
#define MOLLY_CLI_SCENARIO_HPP

#include <molly/error.hpp>
#include <molly/polygon.hpp>
#include <molly/series.hpp>
#include <molly/valuation.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace molly::cli
{

using json = nlohmann::ordered_json;

struct Task {
    std::string kind;
    // Canonical parameters, including "task".
    json params;
};

struct Scenario {
    std::string id;
    std::uint32_t p = 0;
    std::vector<std::string> base_vars;
    std::vector<std::string> fiber_vars;
    std::int64_t bound = 0;
    std::optional<FiberSeries> series;
    std::vector<std::pair<std::string, ToricValuation>> valuations;
    std::vector<Task> tasks;
    // Passed through untouched; read by `molly verify`.
    json expect;
    int expect_exit = 0;
};

struct RunOptions {
    bool strict_truncation = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

struct TaskOutcome {
    json result;
    // Polygons produced by the task, for csv and svg output.
    std::vector<Polygon> polygons;
    bool failed = false;
};

struct RunResult {
    json envelope;
    std::vector<TaskOutcome> outcomes;
    std::vector<std::string> warnings;
    int exit_code = 0;
};

// Throws molly::Error on anything malformed; the CLI maps that to exit 2.
Scenario parse_scenario(const json &doc);
json serialize_scenario(const Scenario &s);

RunResult run_scenario(const Scenario &s, const RunOptions &opts);

// Diagnostic envelope for a scenario that failed validation.
json validation_failure(const std::string &id, const Error &e);

std::string render_json(const json &envelope);
std::string render_csv(const RunResult &r);
std::string render_svg(const RunResult &r);

// Exact string plus float approximation under key and key_approx.
void put_exact(json &j, const std::string &key, const Rational &r);
json polygon_to_json(const Polygon &poly);
json poly_to_json(const PuiseuxPoly &f);
json series_to_json(const FiberSeries &f);

} // namespace molly::cli

#endif
