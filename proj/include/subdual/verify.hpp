#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace subdual {

/// One law over an index-addressable instance space. check(i) returns a
/// description of instance i when the law fails there, nothing otherwise.
/// check must be pure: the parallel driver calls it from several threads.
struct Law {
    std::string name;
    std::uint64_t count = 0;
    std::function<std::optional<std::string>(std::uint64_t)> check;
};

struct LawResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t counterexamples = 0;
    /// The counterexample with the least index.
    std::optional<std::string> first_counterexample;

    bool passed() const noexcept { return counterexamples == 0; }
    friend bool operator==(const LawResult&, const LawResult&) = default;
};

/// Plain loop over the indices.
LawResult run_law_serial(const Law& law);
/// OpenMP sweep; jobs <= 0 uses the runtime default. Produces the same result as run_law_serial.
LawResult run_law_parallel(const Law& law, int jobs);

struct Report {
    std::string suite;
    std::string statement;
    std::vector<std::string> spaces;
    std::vector<LawResult> laws;
    std::vector<std::string> notes;
    double seconds = 0.0;

    std::uint64_t instances() const noexcept;
    bool passed() const noexcept;
};

struct VerifyOptions {
    /// Largest atom/point counts to sweep; the suite's default when absent.
    std::optional<std::pair<int, int>> atoms;
    std::optional<std::pair<int, int>> points;
    /// Sample this many instances per law instead of sweeping exhaustively.
    std::optional<std::uint64_t> random;
    std::uint64_t seed = 0;
    int jobs = 0;
    bool serial = false;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or a size flag the suite
/// does not take, and SizeError when an exhaustive space is over the cap.
Report run_suite(const std::string& suite, const VerifyOptions& options);

/// The laws a suite would run, without running them.
std::vector<Law> suite_laws(const std::string& suite, const VerifyOptions& options, Report& header);

/// Canonical JSON with sorted keys; the duration is the only unstable field.
std::string report_json(const Report& report, bool include_duration = true);
std::string report_text(const Report& report);

}  // namespace subdual
