#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/report.hpp"

namespace sextic::suites {

struct Options {
    std::uint64_t seed = 0;
    std::uint32_t prime = 10007;
    std::size_t trials = 100;
    bool fail_fast = false;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Field scans use this prime regardless of --prime.
inline constexpr std::uint32_t kCensusPrime = 101;

struct CheckInfo {
    std::string suite;
    std::string id;
    std::string anchor;
};
// Every check id with its anchor, in report order.
const std::vector<CheckInfo>& catalog();
const std::string& anchor_of(const std::string& id);

// exterior, epw, incidence, quadrics, chow, schubert, bbf
const std::vector<std::string>& suite_names();
// Throws UsageError for an unknown suite or a prime that is not an odd prime > 13.
void validate(const std::string& suite, const Options& options);

report::SuiteReport run_suite(const std::string& suite, const Options& options, std::uint64_t stream);
// "all" runs every suite concurrently and concatenates the checks in suite order.
report::SuiteReport run(const std::string& suite, const Options& options);

} // namespace sextic::suites
