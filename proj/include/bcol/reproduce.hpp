#pragma once

#include <string>
#include <vector>

namespace bcol {

enum class CriterionStatus { Pass, Fail, Unknown, Info };

const char* criterion_status_name(CriterionStatus s);

struct CriterionResult {
    int id = 0;
    std::string name;
    CriterionStatus status = CriterionStatus::Fail;
    std::string detail;
    double seconds = 0;
};

// ids 1..10 are checked claims, 11 is the informational lower bound
CriterionResult run_criterion(int id, int jobs = 1);

std::vector<CriterionResult> run_acceptance(int jobs = 1);

}  // namespace bcol
