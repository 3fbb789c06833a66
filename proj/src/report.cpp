#include "sextic/report.hpp"

#include <algorithm>
#include <sstream>

#include "sextic/epw.hpp"

namespace sextic::report {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skip:
        return "skip";
    }
    return "?";
}

bool SuiteReport::failed() const
{
    return count(Status::Fail) > 0;
}

std::size_t SuiteReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

nlohmann::ordered_json to_json(const SuiteReport& r)
{
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j{{"id", c.id},
                                 {"anchor", c.anchor},
                                 {"status", to_string(c.status)},
                                 {"expected", c.expected},
                                 {"got", c.got}};
        if (!c.witness.empty())
            j["witness"] = c.witness;
        checks.push_back(std::move(j));
    }
    return {{"suite", r.suite}, {"seed", r.seed}, {"prime", r.prime}, {"checks", checks}, {"ms", r.ms}};
}

std::string to_text(const SuiteReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << c.id << ": " << to_string(c.status);
        if (c.status != Status::Pass || !c.expected.empty())
            os << " (expected " << c.expected << ", got " << c.got << ")";
        if (!c.witness.empty())
            os << " [" << c.witness << "]";
        os << '\n';
    }
    os << r.suite << ": " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
       << r.count(Status::Skip) << " skip\n";
    return os.str();
}

Outcome verdict(bool ok, std::string expected, std::string got, std::string witness)
{
    return {ok ? Status::Pass : Status::Fail, std::move(expected), std::move(got), std::move(witness)};
}

Outcome compare(const std::string& expected, const std::string& got, std::string witness)
{
    return verdict(expected == got, expected, got, std::move(witness));
}

Outcome skipped(std::string expected, std::string why)
{
    return {Status::Skip, std::move(expected), "skipped", std::move(why)};
}

void Battery::run(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body)
{
    if (stopped_)
        return;
    Check c{id, anchor, Status::Fail, "", "", ""};
    try {
        Outcome o = body();
        c.status = o.status;
        c.expected = std::move(o.expected);
        c.got = std::move(o.got);
        c.witness = std::move(o.witness);
    } catch (const epw::RetryBudgetExhausted& e) {
        c.status = Status::Skip;
        c.got = "skipped";
        c.witness = e.what();
    } catch (const std::exception& e) {
        c.status = Status::Fail;
        c.got = std::string("error: ") + e.what();
    }
    if (c.status == Status::Fail && fail_fast_)
        stopped_ = true;
    report_.checks.push_back(std::move(c));
}

} // namespace sextic::report
