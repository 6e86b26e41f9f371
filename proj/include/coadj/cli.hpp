#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace coadj::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct RunConfig {
    std::string command; // diagrams, generators, census, classify, canonical, verify
    int n = 0;
    std::optional<std::uint32_t> p;
    std::string format;
    bool maximal_only = false; // accepted; the catalog is the default listing
    bool all_admissible = false;
    bool per_dimension = false;
    std::string diagram; // "n,k,m"
    std::string c;       // "v1,v2,..."
    std::string form;    // "i,j=v;..."
    std::string suite;
    std::uint64_t seed = 42;
    std::uint64_t budget = 0; // 0: COADJ_STATE_BUDGET or the default
};

struct RunResult {
    int status = kOk;
    std::string output; // report text, newline terminated
    std::string error;  // diagnostic for stderr
};

RunResult run(const RunConfig& config);

} // namespace coadj::cli
