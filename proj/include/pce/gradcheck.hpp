#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pce/mlp.hpp"

namespace pce {

// Central finite differences against analytic gradients, one toy
// configuration at a time. Shared by the gradcheck CLI command, the unit
// tests and the acceptance suite.

constexpr double kFdStep = 1e-5;
constexpr double kFdTolerance = 1e-5;

// |a - f| / max(|a|, |f|, 1e-3).
double fd_relative_error(double analytic, double fd);

// Central difference over every element of every param, comparing against
// the matching analytic entries. `eval` must recompute the loss from
// current param values without consuming shared state.
double max_fd_error_params(std::vector<Param*> params,
                           const std::function<double()>& eval,
                           const std::vector<const Matrix*>& analytic_grads,
                           double h = kFdStep);

// Same, but for a gradient w.r.t. a plain matrix input.
double max_fd_error_matrix(Matrix& input, const std::function<double()>& eval,
                           const Matrix& analytic_grad, double h = kFdStep);

struct GradCheckReport {
    std::string term;
    double max_rel_err = 0.0;
    bool pass = false;
};

// Runs every loss term's finite-difference suite over `configs` random toy
// configurations. `corrupt_term` (diagnostic) injects a deliberate offset
// into that term's analytic gradient so the failure path is exercised.
std::vector<GradCheckReport> run_gradcheck(std::uint64_t seed, int configs = 100,
                                           const std::string& corrupt_term = "");

}  // namespace pce
