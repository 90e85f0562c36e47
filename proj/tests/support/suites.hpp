#pragma once

#include <functional>
#include <string>
#include <vector>

namespace testkit {

struct SuiteResult {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 10) failures.push_back(what);
    }
};

SuiteResult e_homomorphism_suite();
SuiteResult ord_suite();
SuiteResult derivation_suite();
SuiteResult membership_suite();
SuiteResult augmentation_suite();
SuiteResult tower_suite();
SuiteResult saturation_suite();
SuiteResult rabinowitsch_suite();
SuiteResult real_kernel_suite();
SuiteResult series_suite();

struct Criterion {
    int number;
    std::string name;
    std::function<SuiteResult()> run;
};

const std::vector<Criterion>& criteria();

}  // namespace testkit
