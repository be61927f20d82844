#pragma once

#include <cstdint>

#include "pce/matrix.hpp"

namespace pce {

// A trainable tensor with its gradient buffer and Adam state.
struct Param {
    Matrix value;
    Matrix grad;
    Matrix adam_m;
    Matrix adam_v;
    std::int64_t step_count = 0;

    Param() = default;
    explicit Param(Matrix v)
        : value(std::move(v)),
          grad(value.rows, value.cols),
          adam_m(value.rows, value.cols),
          adam_v(value.rows, value.cols) {}

    void zero_grad() { grad.fill(0.0); }
};

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.5;
    double beta2 = 0.99;
    double eps = 1e-8;
};

// Standard Adam with bias correction; increments step_count.
void adam_step(Param& p, const AdamConfig& cfg);

}  // namespace pce
