#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <thread>

#include "bcol/reproduce.hpp"

using namespace bcol;

TEST_CASE("recorded claims reproduce") {
    int jobs = int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    for (int id = 1; id <= 11; ++id) {
        CriterionResult r = run_criterion(id, jobs);
        bool ok = r.status == CriterionStatus::Pass ||
                  (id == 11 && r.status == CriterionStatus::Info);
        std::printf("%s  criterion %2d  %-44s %6.1fs  %s\n", ok ? "pass" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(ok, r.name, ": ", r.detail);
    }
}
