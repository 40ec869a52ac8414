#include "subdual/verify.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include <json.hpp>

#ifdef SUBDUAL_HAVE_OPENMP
#include <omp.h>
#endif

namespace subdual {

namespace {

std::optional<std::string> guarded(const Law& law, std::uint64_t i)
{
    try {
        return law.check(i);
    } catch (const std::exception& e) {
        return std::string("exception at instance ") + std::to_string(i) + ": " + e.what();
    }
}

}  // namespace

LawResult run_law_serial(const Law& law)
{
    LawResult r{law.name, law.count, 0, std::nullopt};
    for (std::uint64_t i = 0; i < law.count; ++i) {
        if (auto c = guarded(law, i)) {
            if (!r.first_counterexample) r.first_counterexample = std::move(c);
            ++r.counterexamples;
        }
    }
    return r;
}

LawResult run_law_parallel(const Law& law, int jobs)
{
#ifdef SUBDUAL_HAVE_OPENMP
    const auto n = static_cast<std::int64_t>(law.count);
    std::uint64_t failures = 0;
    std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) reduction(+ : failures) reduction(min : first)
    for (std::int64_t i = 0; i < n; ++i) {
        if (guarded(law, static_cast<std::uint64_t>(i))) {
            ++failures;
            if (static_cast<std::uint64_t>(i) < first) first = static_cast<std::uint64_t>(i);
        }
    }
    LawResult r{law.name, law.count, failures, std::nullopt};
    // Checks are pure, so the least failing index is re-described serially.
    if (failures) r.first_counterexample = guarded(law, first);
    return r;
#else
    (void)jobs;
    return run_law_serial(law);
#endif
}

std::uint64_t Report::instances() const noexcept
{
    std::uint64_t total = 0;
    for (const auto& l : laws) total += l.checked;
    return total;
}

bool Report::passed() const noexcept
{
    for (const auto& l : laws)
        if (!l.passed()) return false;
    return true;
}

Report run_suite(const std::string& suite, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    const std::vector<Law> laws = suite_laws(suite, options, report);
    for (const Law& law : laws)
        report.laws.push_back(options.serial ? run_law_serial(law) : run_law_parallel(law, options.jobs));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_json(const Report& report, bool include_duration)
{
    nlohmann::json j;
    j["suite"] = report.suite;
    j["statement"] = report.statement;
    j["spaces"] = report.spaces;
    j["notes"] = report.notes;
    j["instances"] = report.instances();
    j["passed"] = report.passed();
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : report.laws) {
        nlohmann::json lj;
        lj["name"] = l.name;
        lj["checked"] = l.checked;
        lj["counterexamples"] = l.counterexamples;
        lj["passed"] = l.passed();
        lj["first_counterexample"] = l.first_counterexample ? nlohmann::json(*l.first_counterexample) : nlohmann::json();
        laws.push_back(lj);
    }
    j["laws"] = laws;
    if (include_duration) j["seconds"] = report.seconds;
    return j.dump();
}

std::string report_text(const Report& report)
{
    std::ostringstream out;
    out << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    out << "  " << report.statement << "\n";
    for (const auto& s : report.spaces) out << "  space " << s << "\n";
    for (const auto& l : report.laws) {
        out << "  " << (l.passed() ? "ok  " : "FAIL") << " " << l.name << " (" << l.checked << " checked";
        if (!l.passed()) out << ", " << l.counterexamples << " counterexamples";
        out << ")\n";
        if (l.first_counterexample) out << "       first: " << *l.first_counterexample << "\n";
    }
    for (const auto& n : report.notes) out << "  note: " << n << "\n";
    out << "  " << report.instances() << " instances in " << report.seconds << " s\n";
    return out.str();
}

}  // namespace subdual
