// Acceptance suite: runs every criterion at its stated (exact) tolerance and
// prints one pass/fail line per criterion.  Exit code 0 iff all pass.
#include <cstdio>
#include <cstring>

#include "qyb/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace qyb;
    SuiteScale scale = SuiteScale::Small;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) scale = SuiteScale::Full;
    auto results = run_acceptance(scale);
    bool all = true;
    long total_ms = 0;
    for (const auto& res : results) {
        bool pass = res.report.all_pass();
        all = all && pass;
        total_ms += res.elapsed_ms;
        std::printf("criterion %2d  %-28s  %s  (%zu checks, %ld ms)\n", res.number, res.title.c_str(),
                    pass ? "PASS" : "FAIL", res.report.items.size(), res.elapsed_ms);
        if (!pass)
            for (const auto& item : res.report.items)
                if (!item.pass) std::printf("    FAIL %s %s\n", item.name.c_str(), item.detail.c_str());
    }
    std::printf("%s  (13 criteria, %ld ms summed)\n", all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES", total_ms);
    return all ? 0 : 1;
}
