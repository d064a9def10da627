#include "scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using molly::cli::json;

namespace
{

bool read_json(const fs::path &path, json &doc, std::string &error)
{
    std::ifstream in(path);
    if (!in) {
        error = "cannot open " + path.string();
        return false;
    }
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        error = e.what();
        return false;
    }
    return true;
}

struct Produced {
    int code = 0;
    std::string text;
    json envelope;
};

Produced produce(const json &doc, const molly::cli::RunOptions &opts, const std::string &format)
{
    Produced out;
    molly::cli::Scenario s;
    try {
        s = molly::cli::parse_scenario(doc);
    } catch (const molly::Error &e) {
        const std::string id = doc.is_object() && doc.contains("id") && doc["id"].is_string() ? doc["id"].get<std::string>() : "";
        out.code = 2;
        out.envelope = molly::cli::validation_failure(id, e);
        out.text = molly::cli::render_json(out.envelope);
        return out;
    }
    const molly::cli::RunResult r = molly::cli::run_scenario(s, opts);
    out.code = r.exit_code;
    out.envelope = r.envelope;
    if (format == "csv") {
        out.text = molly::cli::render_csv(r);
    } else if (format == "svg") {
        out.text = molly::cli::render_svg(r);
    } else {
        out.text = molly::cli::render_json(r.envelope);
    }
    for (const auto &w : r.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return out;
}

int verify(const fs::path &dir, const molly::cli::RunOptions &opts)
{
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    int failures = 0;
    for (const auto &path : files) {
        std::string why;
        json doc;
        if (!read_json(path, doc, why)) {
            std::cout << "FAIL " << path.filename().string() << ": " << why << "\n";
            ++failures;
            continue;
        }
        const int expected_exit = doc.value("expect_exit", 0);
        const Produced a = produce(doc, opts, "json");
        const Produced b = produce(doc, opts, "json");
        if (a.text != b.text) {
            why = "output differs between runs";
        } else if (a.code != expected_exit) {
            why = "exit " + std::to_string(a.code) + ", expected " + std::to_string(expected_exit);
        } else if (a.code != 2 && molly::cli::serialize_scenario(molly::cli::parse_scenario(doc)) != doc) {
            why = "fixture is not in canonical form";
        } else if (doc.contains("expect")) {
            for (const auto &[pointer, want] : doc["expect"].items()) {
                const json::json_pointer ptr(pointer);
                if (!a.envelope.contains(ptr)) {
                    why = pointer + " missing";
                    break;
                }
                if (a.envelope.at(ptr) != want) {
                    why = pointer + " is " + a.envelope.at(ptr).dump() + ", expected " + want.dump();
                    break;
                }
            }
        }
        std::cout << (why.empty() ? "PASS " : "FAIL ") << path.filename().string() << (why.empty() ? "" : ": " + why)
                  << "\n";
        failures += why.empty() ? 0 : 1;
    }
    std::cout << files.size() - static_cast<std::size_t>(failures) << "/" << files.size() << " fixtures passed\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"molly: valuation polygons and Artin-Schreier mollifiers in characteristic p"};
    app.require_subcommand(1);

    molly::cli::RunOptions opts;
    std::string scenario_path;
    std::string out_path;
    std::string format = "json";
    std::string fixtures;

    auto *run = app.add_subcommand("run", "evaluate a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON")->required();
    run->add_option("-o,--output", out_path, "write here instead of stdout");
    run->add_option("--format", format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    run->add_flag("--strict-truncation", opts.strict_truncation, "fail instead of truncating twists at the box edge");
    run->add_option("--jobs", opts.jobs, "worker threads for independent tasks")->check(CLI::Range(1u, 256u));
    run->add_option("--seed", opts.seed, "seed for randomized tasks (MOLLY_SEED overrides)");

    auto *ver = app.add_subcommand("verify", "run every fixture in a directory and check its expectations");
    ver->add_option("dir", fixtures, "fixtures directory")->required()->check(CLI::ExistingDirectory);
    ver->add_option("--jobs", opts.jobs, "worker threads for independent tasks")->check(CLI::Range(1u, 256u));

    std::string fmt_path;
    auto *fmt = app.add_subcommand("fmt", "print a scenario in canonical form");
    fmt->add_option("scenario", fmt_path, "scenario JSON")->required();

    CLI11_PARSE(app, argc, argv);

    if (const char *env = std::getenv("MOLLY_SEED")) {
        try {
            opts.seed = std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "MOLLY_SEED must be an unsigned integer\n";
            return 2;
        }
    }

    if (*ver) {
        return verify(fixtures, opts);
    }
    if (*fmt) {
        json doc;
        std::string error;
        if (!read_json(fmt_path, doc, error)) {
            std::cerr << error << "\n";
            return 2;
        }
        try {
            std::cout << molly::cli::render_json(molly::cli::serialize_scenario(molly::cli::parse_scenario(doc)));
        } catch (const molly::Error &e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        return 0;
    }

    json doc;
    std::string error;
    if (!read_json(scenario_path, doc, error)) {
        const json env = molly::cli::validation_failure("", molly::Error(molly::ErrorCode::ParseError, error));
        std::cout << molly::cli::render_json(env);
        std::cerr << error << "\n";
        return 2;
    }
    const Produced r = produce(doc, opts, format);
    if (r.code == 2) {
        std::cerr << r.envelope["error"]["message"].get<std::string>() << "\n";
    }
    if (out_path.empty()) {
        std::cout << r.text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        out << r.text;
    }
    return r.code;
}
