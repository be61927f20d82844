#pragma once

#include <vector>

#include "pce/matrix.hpp"
#include "pce/param.hpp"
#include "pce/rng.hpp"

namespace pce {

constexpr double kLeakySlope = 0.2;

// Feed-forward stack of affine layers. Hidden layers use LeakyReLU;
// the output layer is linear unless output_leaky is set.
struct MlpSpec {
    std::vector<int> layer_dims;  // at least {input, output}
    bool output_leaky = false;
    double slope = kLeakySlope;

    int input_dim() const { return layer_dims.front(); }
    int output_dim() const { return layer_dims.back(); }
    std::size_t layer_count() const { return layer_dims.size() - 1; }
};

struct MlpNet {
    MlpSpec spec;
    std::vector<Param> weights;  // weights[l]: dims[l] x dims[l+1]
    std::vector<Param> biases;   // biases[l]: 1 x dims[l+1]

    std::vector<Param*> params();
    void zero_grad();
};

// Weights ~ N(0, 0.02^2), biases zero.
MlpNet init_network(const MlpSpec& spec, Rng& rng);

struct MlpCache {
    Matrix input;
    std::vector<Matrix> pre_acts;  // affine outputs per layer
    std::vector<Matrix> acts;      // post-activation outputs per layer
};

Matrix mlp_forward(const MlpNet& net, const Matrix& x, MlpCache* cache = nullptr);

// Reverse pass from dL/doutput. Accumulates into param grads unless
// accumulate_params is false; always returns dL/dinput.
Matrix mlp_backward(MlpNet& net, const MlpCache& cache, const Matrix& grad_out,
                    bool accumulate_params = true);

// Smallest |pre-activation| over all hidden units (and the output layer if it
// is leaky). Gradient checks redraw configurations whose margin is too small
// for central differences to stay on one side of the kink.
double min_preact_margin(const MlpNet& net, const MlpCache& cache);

}  // namespace pce
