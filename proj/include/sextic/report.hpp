#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sextic::report {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Check {
    std::string id;
    std::string anchor;
    Status status = Status::Pass;
    std::string expected;
    std::string got;
    std::string witness; // optional
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint32_t prime = 0;
    std::vector<Check> checks;
    std::int64_t ms = 0;

    bool failed() const;
    std::size_t count(Status s) const;
};

nlohmann::ordered_json to_json(const SuiteReport& r);
// One line per check: "id: status (expected ..., got ...)".
std::string to_text(const SuiteReport& r);

struct Outcome {
    Status status;
    std::string expected;
    std::string got;
    std::string witness;
};
Outcome verdict(bool ok, std::string expected, std::string got, std::string witness = {});
Outcome compare(const std::string& expected, const std::string& got, std::string witness = {});
Outcome skipped(std::string expected, std::string why);

// Runs checks in declaration order, turning exceptions into failures. After the
// first failure with fail_fast set, later checks are not run.
class Battery {
public:
    Battery(SuiteReport& report, bool fail_fast) : report_(report), fail_fast_(fail_fast) {}

    void run(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body);
    bool stopped() const { return stopped_; }

private:
    SuiteReport& report_;
    bool fail_fast_;
    bool stopped_ = false;
};

} // namespace sextic::report
