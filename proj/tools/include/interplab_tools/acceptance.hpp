#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "interplab_tools/config.hpp"

namespace interplab::tools {

/// How measured is compared with expected:
///   Near    |measured - expected| <= tolerance
///   AtLeast measured >= expected - tolerance
///   AtMost  measured <= expected + tolerance
///   Factor  max(measured/expected, expected/measured) <= 1 + tolerance
enum class Relation { Near, AtLeast, AtMost, Factor };

struct CheckOutcome {
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::Near;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<CheckOutcome> checks;
    double seconds = 0.0;

    [[nodiscard]] bool pass() const;
};

/// Default tolerance of every named acceptance check.
const std::vector<std::pair<std::string, double>>& acceptance_tolerances();

/// Runs criterion `id` (1..11) with tolerances and grids from `config`.
CriterionResult run_criterion(int id, const RunConfig& config);
inline constexpr int kCriterionCount = 11;

std::vector<CriterionResult> run_acceptance(const RunConfig& config);

/// {"checks": [{criterion, check_name, measured, expected, tolerance, relation, pass}], "pass": bool}
nlohmann::json summary_json(const std::vector<CriterionResult>& results);

/// One line: "[PASS] 3 mean-vs-sup ratio: ratio=0.65497 (expected 0.63662 +- 0.05)".
std::string format_criterion(const CriterionResult& result);

const char* to_string(Relation relation);

}  // namespace interplab::tools
