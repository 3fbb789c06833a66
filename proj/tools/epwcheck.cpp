#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sextic/chow.hpp"
#include "sextic/quadrics.hpp"
#include "sextic/suites.hpp"

using namespace sextic;

namespace {

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("EPW_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw suites::UsageError(std::string("EPW_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

int write_json(const nlohmann::ordered_json& doc, const std::string& path)
{
    const std::string text = doc.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "epwcheck: cannot write " << path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification batteries for double EPW sextics"};
    app.require_subcommand(1);

    suites::Options options;
    std::string suite, json_path;
    bool timing = false;
    std::optional<std::uint64_t> seed;

    auto* run = app.add_subcommand("run", "run a suite of checks");
    run->add_option("suite,--suite", suite, "exterior, epw, incidence, quadrics, chow, schubert, bbf or all");
    run->add_option("--seed", seed, "RNG seed (default 0, or EPW_SEED)");
    run->add_option("--prime", options.prime, "sampling prime, odd and > 13")->capture_default_str();
    run->add_option("--trials", options.trials, "trials per probabilistic check")->capture_default_str();
    run->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    run->add_flag("--fail-fast", options.fail_fast, "stop after the first failing check");
    run->add_flag("--timing", timing, "record wall time in ms (otherwise 0)");

    auto* list = app.add_subcommand("list", "print every check id with its anchor");
    bool list_json = false;
    list->add_flag("--json", list_json, "as JSON");

    auto* scan = app.add_subcommand("scan", "rank census of a web of quadrics over F_p");
    std::uint32_t scan_prime = suites::kCensusPrime;
    bool diagonal = false;
    scan->add_option("--prime", scan_prime, "field size")->capture_default_str();
    scan->add_option("--seed", seed, "RNG seed for the random web");
    scan->add_flag("--diagonal", diagonal, "use the diagonal web");

    auto* relations = app.add_subcommand("relations", "print the derived Chern class relations as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*run) {
            if (suite.empty())
                throw suites::UsageError("no suite given");
            options.seed = seed ? *seed : default_seed();
            const auto start = std::chrono::steady_clock::now();
            report::SuiteReport r = suites::run(suite, options);
            if (timing)
                r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                           .count();
            if (json_path != "-")
                std::cout << report::to_text(r);
            if (!json_path.empty() && write_json(report::to_json(r), json_path) != 0)
                return 2;
            return r.failed() ? 1 : 0;
        }
        if (*list) {
            if (list_json) {
                nlohmann::ordered_json doc = nlohmann::ordered_json::array();
                for (const auto& c : suites::catalog())
                    doc.push_back({{"suite", c.suite}, {"id", c.id}, {"anchor", c.anchor}});
                return write_json(doc, "-");
            }
            for (const auto& c : suites::catalog())
                std::cout << c.suite << "\t" << c.id << "\t" << c.anchor << "\n";
            return 0;
        }
        if (*scan) {
            if (scan_prime < 3 || scan_prime > quadrics::kScanGuard || !is_prime_number(scan_prime))
                throw suites::UsageError("--prime must be an odd prime <= " + std::to_string(quadrics::kScanGuard));
            const Field f = Field::prime(scan_prime);
            Rng rng(seed ? *seed : default_seed());
            const auto web = diagonal ? quadrics::WebOfQuadrics::diagonal(f) : quadrics::WebOfQuadrics::random(f, rng);
            const quadrics::Census c = quadrics::field_scan(web);
            nlohmann::ordered_json doc;
            doc["prime"] = c.prime;
            doc["web"] = diagonal ? "diagonal" : "random";
            doc["rows"] = quadrics::census_rows(c);
            doc["singular_violations"] = c.singular_violations;
            doc["rank3_singular"] = c.rank3_singular;
            return write_json(doc, "-");
        }
        if (*relations) {
            const chow::ChernDerivation s = chow::derive_chern_relations(chow::VarietyModel{});
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const auto& r : s.relations)
                doc.push_back(chow::to_json(r));
            return write_json(doc, "-");
        }
    } catch (const suites::UsageError& e) {
        std::cerr << "epwcheck: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
