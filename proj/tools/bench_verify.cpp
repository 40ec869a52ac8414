// Serial reference vs OpenMP sweep, per suite, wall-clock.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subdual/verify.hpp"

using namespace subdual;

namespace {

template <class F>
double best_of(int repeat, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        if (dt.count() < best) best = dt.count();
    }
    return best;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"compare the serial and parallel law drivers"};
    std::vector<std::string> suites;
    int jobs = 0;
    int repeat = 3;
    app.add_option("suites", suites, "suites to time (default: all)");
    app.add_option("--jobs", jobs, "OpenMP threads for the parallel driver, 0 = runtime default");
    app.add_option("--repeat", repeat, "runs per measurement; the best is reported")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);
    if (suites.empty()) suites = suite_names();

    std::printf("%-22s %12s %10s %10s %8s %s\n", "suite", "instances", "serial_s", "parallel_s", "speedup", "agree");
    for (const std::string& name : suites) {
        Report header;
        const std::vector<Law> laws = suite_laws(name, VerifyOptions{}, header);
        std::vector<LawResult> serial;
        std::vector<LawResult> parallel;
        const double ts = best_of(repeat, [&] {
            serial.clear();
            for (const Law& l : laws) serial.push_back(run_law_serial(l));
        });
        const double tp = best_of(repeat, [&] {
            parallel.clear();
            for (const Law& l : laws) parallel.push_back(run_law_parallel(l, jobs));
        });
        std::uint64_t n = 0;
        for (const LawResult& r : serial) n += r.checked;
        std::printf("%-22s %12llu %10.4f %10.4f %8.2f %s\n", name.c_str(), static_cast<unsigned long long>(n), ts, tp,
                    tp > 0 ? ts / tp : 0.0, serial == parallel ? "yes" : "NO");
    }
    return 0;
}
