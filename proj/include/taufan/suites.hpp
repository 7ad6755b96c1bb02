#pragma once

#include "taufan/engine.hpp"

#include <string>
#include <vector>

namespace taufan {

enum class SuiteStatus { Pass, Fail, Skipped };

struct SuiteResult {
    std::string name;
    SuiteStatus status = SuiteStatus::Pass;
    int checks = 0;
    std::string detail;  // first counterexample, or the reason for skipping
};

std::string status_string(SuiteStatus s);

// Stability vectors used by the property suites: interior samples of every
// tau-rigid sub-pair (finite case) plus the grid {-1,0,1}^n.
std::vector<QVec> sample_vectors(Engine& e);

SuiteResult suite_ar_pairing(Engine& e);
SuiteResult suite_fan(Engine& e);
SuiteResult suite_unimodularity(Engine& e);
SuiteResult suite_sign_coherence(Engine& e);
SuiteResult suite_semibricks(Engine& e);
SuiteResult suite_semistable_equivalence(Engine& e);
SuiteResult suite_chamber_count(Engine& e);
SuiteResult suite_stable_count(Engine& e);
SuiteResult suite_wide(Engine& e);
SuiteResult suite_stable_brick(Engine& e);
SuiteResult suite_bkt(Engine& e);
SuiteResult suite_rudakov(Engine& e);
SuiteResult suite_skowronski(Engine& e);
SuiteResult suite_sum_rule(Engine& e);

std::vector<SuiteResult> run_all_suites(Engine& e);

}  // namespace taufan
