#include <set>

#include <doctest.h>

#include "sextic/suites.hpp"

using namespace sextic;

TEST_CASE("catalog ids are unique and anchored")
{
    std::set<std::string> ids;
    for (const auto& c : suites::catalog()) {
        CHECK(ids.insert(c.id).second);
        CHECK_FALSE(c.anchor.empty());
    }
    CHECK(ids.size() == suites::catalog().size());
}

TEST_CASE("usage errors")
{
    suites::Options o;
    CHECK_THROWS_AS(suites::validate("nope", o), suites::UsageError);
    o.prime = 13;
    CHECK_THROWS_AS(suites::validate("all", o), suites::UsageError);
    o.prime = 10001;
    CHECK_THROWS_AS(suites::validate("all", o), suites::UsageError);
    o.prime = 17;
    CHECK_NOTHROW(suites::validate("all", o));
}

TEST_CASE("reports are deterministic and follow the catalog")
{
    suites::Options o;
    o.seed = 3;
    o.trials = 10;
    const report::SuiteReport a = suites::run("bbf", o), b = suites::run("bbf", o);
    CHECK(report::to_json(a).dump() == report::to_json(b).dump());
    CHECK_FALSE(a.failed());
    const auto doc = report::to_json(a);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"suite", "seed", "prime", "checks", "ms"});
    for (const auto& c : a.checks)
        CHECK(suites::anchor_of(c.id) == c.anchor);
}

TEST_CASE("fail fast stops a suite at the first failure")
{
    suites::Options o;
    o.fail_fast = true;
    const report::SuiteReport r = suites::run("schubert", o);
    REQUIRE_FALSE(r.checks.empty());
    CHECK(r.checks.back().status == report::Status::Fail);
    CHECK(r.checks.back().id == "sym6_top_chern");
}
