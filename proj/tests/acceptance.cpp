// Runs every acceptance criterion at its default scale and prints one line per criterion.
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "subdual/enumeration.hpp"
#include "subdual/verify.hpp"

using namespace subdual;

namespace {

struct Criterion {
    int number;
    std::string suite;
    // extra exact checks on top of the suite's laws
    std::function<std::string()> extra;
};

std::string enumeration_counts()
{
    if (brute_force_subordinations(1, 1).size() != 2) return "brute-force subordinations at 1x1 != 2";
    if (brute_force_subordinations(2, 2).size() != 16) return "brute-force subordinations at 2x2 != 16";
    if (all_sub_cores(2, 2).size() != 16) return "core subordinations at 2x2 != 16";
    if (brute_force_devries_morphisms(2, 2).size() != 4) return "brute-force M1-M4 morphisms at 2->2 != 4";
    const std::uint64_t bell[] = {1, 1, 2, 5, 15};
    for (int n = 0; n <= 4; ++n)
        if (brute_force_equivalences(n).size() != bell[n]) return "equivalences at " + std::to_string(n) + " points";
    return "";
}

std::string dual_iso_counts()
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            std::uint64_t expect = 1;
            for (int k = 0; k < n; ++k) expect *= static_cast<std::uint64_t>(m);
            if (all_devries_morphisms(m, n).size() != expect || all_map_subs(n, m).size() != expect)
                return "count at " + std::to_string(m) + "," + std::to_string(n) + " is not m^n";
        }
    return "";
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "duality", nullptr},
        {2, "allegory-laws", nullptr},
        {3, "qsh", nullptr},
        {4, "equivalence-transfer", nullptr},
        {5, "quotient-functor", nullptr},
        {6, "s8-irreducibility", nullptr},
        {7, "devries-dual-iso", dual_iso_counts},
        {8, "iso-extraction", nullptr},
        {9, "enumeration", enumeration_counts},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            const Report r = run_suite(c.suite, VerifyOptions{});
            ok = r.passed() && r.instances() > 0;
            detail = std::to_string(r.instances()) + " instances";
            for (const LawResult& law : r.laws)
                if (!law.passed()) {
                    detail = law.name + ": " + law.first_counterexample.value_or("?");
                    break;
                }
            if (ok && c.extra) {
                const std::string why = c.extra();
                if (!why.empty()) {
                    ok = false;
                    detail = why;
                }
            }
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        if (!ok) ++failed;
        std::printf("criterion %d %-20s %s (%s)\n", c.number, c.suite.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
