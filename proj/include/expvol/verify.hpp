// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <string>
#include <vector>

namespace expvol::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double measured = 0.0;  // worst observed deviation (or reported figure)
    double threshold = 0.0; // tolerance it is held against
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite; one entry per criterion.
std::vector<CriterionResult> run_all();

// One line per criterion, "PASS/FAIL  id  name  measured  threshold  detail".
void print_report(const std::vector<CriterionResult>& results, bool color = false);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace expvol::verify
