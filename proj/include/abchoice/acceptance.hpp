#pragma once

#include <string>
#include <vector>

#include "abchoice/execution.hpp"

namespace abchoice {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

/// Number of acceptance criteria (ids 1..criterion_count()).
int criterion_count();
std::string criterion_title(int id);
/// Runs one criterion; exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, Execution exec = Execution::Serial);

/// Suite names, in a fixed order.
const std::vector<std::string>& suite_names();
/// Criteria ids run by a suite. Throws UnknownSuite.
std::vector<int> suite_criteria(const std::string& name);

/// Data of the shipped random-chooser instances (criterion 10), serialised
/// as one JSON document; identical seeds give identical bytes.
std::string random_instance_report(Execution exec = Execution::Serial);

} // namespace abchoice
