#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/corpus.hpp"

namespace critgraph {

struct SuiteFailure {
    std::string graph6;
    std::string claim;
    std::string expected;
    std::string got;

    bool operator==(const SuiteFailure&) const = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> notes;
    std::uint64_t checks = 0;
    std::vector<SuiteFailure> failures;
    double wall_seconds = 0;

    bool passed() const { return failures.empty(); }
};

/// Suite names in their canonical spelling.
const std::vector<std::string>& suite_names();

/// Maps a name or accepted alias to its canonical spelling; throws Error
/// for anything else.
std::string resolve_suite_name(std::string_view name);

/// Runs one suite over every applicable entry. The report (apart from
/// wall time) depends only on the corpus, the seed, the sample count and
/// the cap, never on the job count.
SuiteReport run_suite(std::string_view name, const Corpus& corpus, const HarnessConfig& config);

/// Flat tab-separated records; wall time is left out so that reports
/// compare byte for byte.
void write_report(const SuiteReport& report, std::ostream& out);

/// Human-readable summary including wall time.
void print_report(const SuiteReport& report, std::ostream& out);

} // namespace critgraph
