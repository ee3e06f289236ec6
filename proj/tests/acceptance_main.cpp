// Acceptance suite: one line per criterion, every comparison an exact
// rational equality. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "monoclif/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

    int failures = 0;
    const auto suite_start = std::chrono::steady_clock::now();
    for (int i = 1; i <= monoclif::acceptance_criteria_count(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const monoclif::VerifyReport report = monoclif::run_acceptance_criterion(i, seed);
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const bool ok = report.all_passed();
        if (!ok) ++failures;
        std::printf("[%s] %-70s (%d/%zu cases, %.0f ms)\n", ok ? "PASS" : "FAIL",
                    monoclif::acceptance_criterion_title(i).c_str(), report.passed(),
                    report.cases.size(), ms);
        if (!ok) {
            int shown = 0;
            for (const auto& c : report.cases) {
                if (c.equal) continue;
                std::printf("       %s %s\n         lhs: %s\n         rhs: %s\n", c.name.c_str(),
                            c.parameters.c_str(), c.lhs.c_str(), c.rhs.c_str());
                if (++shown == 5) {
                    std::printf("       ... further failures suppressed\n");
                    break;
                }
            }
        }
    }
    const auto suite_end = std::chrono::steady_clock::now();
    const double total_s = std::chrono::duration<double>(suite_end - suite_start).count();
    std::printf("%d of %d criteria passed in %.1f s\n",
                monoclif::acceptance_criteria_count() - failures,
                monoclif::acceptance_criteria_count(), total_s);
    return failures;
}
