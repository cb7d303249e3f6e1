// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the expvol authors

#pragma once

#include <stdexcept>
#include <string>

namespace expvol {

// Bad arguments (nonpositive K, arity mismatch, frozen index, ...).
class param_error : public std::invalid_argument {
public:
    explicit param_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Integrand returned NaN/Inf, or a proposal density vanished where it must not.
class eval_error : public std::runtime_error {
public:
    explicit eval_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tolerance not reached within the subdivision budget; carries the best estimate.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err) {}
    double best_estimate;
    double error_estimate;
};

// Volume-polynomial table problems: missing entry, failed validation.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computation paths disagree beyond tolerance.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace expvol
