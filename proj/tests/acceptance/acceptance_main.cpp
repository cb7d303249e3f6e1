// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#include <cstdio>

#include "expvol/verify.hpp"

int main() {
    const auto results = expvol::verify::run_all();
    expvol::verify::print_report(results);
    const bool ok = expvol::verify::all_passed(results);
    std::printf("%s\n", ok ? "acceptance suite: all criteria passed"
                           : "acceptance suite: FAILURES present");
    return ok ? 0 : 1;
}
