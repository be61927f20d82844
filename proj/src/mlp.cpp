#include "pce/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace pce {

std::vector<Param*> MlpNet::params() {
    std::vector<Param*> out;
    out.reserve(weights.size() * 2);
    for (std::size_t l = 0; l < weights.size(); ++l) {
        out.push_back(&weights[l]);
        out.push_back(&biases[l]);
    }
    return out;
}

void MlpNet::zero_grad() {
    for (Param* p : params()) p->zero_grad();
}

MlpNet init_network(const MlpSpec& spec, Rng& rng) {
    if (spec.layer_dims.size() < 2) {
        throw std::runtime_error("init_network: need at least input and output dims");
    }
    for (int d : spec.layer_dims) {
        if (d <= 0) throw std::runtime_error("init_network: non-positive layer dim");
    }
    MlpNet net;
    net.spec = spec;
    for (std::size_t l = 0; l + 1 < spec.layer_dims.size(); ++l) {
        const std::size_t in = static_cast<std::size_t>(spec.layer_dims[l]);
        const std::size_t out = static_cast<std::size_t>(spec.layer_dims[l + 1]);
        Matrix w(in, out);
        for (double& v : w.data) v = 0.02 * rng.gaussian();
        net.weights.emplace_back(std::move(w));
        net.biases.emplace_back(Matrix(1, out, 0.0));
    }
    return net;
}

Matrix mlp_forward(const MlpNet& net, const Matrix& x, MlpCache* cache) {
    if (x.cols != static_cast<std::size_t>(net.spec.input_dim())) {
        throw std::runtime_error("mlp_forward: input width " + x.shape_str() +
                                 " does not match spec input dim " +
                                 std::to_string(net.spec.input_dim()));
    }
    if (cache) {
        cache->input = x;
        cache->pre_acts.clear();
        cache->acts.clear();
    }
    Matrix cur = x;
    const std::size_t layers = net.weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        Matrix pre = add_row_broadcast(matmul(cur, net.weights[l].value), net.biases[l].value);
        const bool leaky = (l + 1 < layers) || net.spec.output_leaky;
        Matrix act = leaky ? leaky_relu(pre, net.spec.slope) : pre;
        if (cache) {
            cache->pre_acts.push_back(std::move(pre));
            cache->acts.push_back(act);
        }
        cur = std::move(act);
    }
    return cur;
}

Matrix mlp_backward(MlpNet& net, const MlpCache& cache, const Matrix& grad_out,
                    bool accumulate_params) {
    const std::size_t layers = net.weights.size();
    if (cache.pre_acts.size() != layers) {
        throw std::runtime_error("mlp_backward: cache does not match network");
    }
    Matrix upstream = grad_out;
    for (std::size_t li = layers; li-- > 0;) {
        const bool leaky = (li + 1 < layers) || net.spec.output_leaky;
        Matrix delta = leaky
                           ? leaky_relu_backward(cache.pre_acts[li], upstream, net.spec.slope)
                           : upstream;
        const Matrix& layer_in = li == 0 ? cache.input : cache.acts[li - 1];
        if (accumulate_params) {
            add_inplace(net.weights[li].grad, matmul(transpose(layer_in), delta));
            add_inplace(net.biases[li].grad, col_sums(delta));
        }
        upstream = matmul(delta, transpose(net.weights[li].value));
    }
    return upstream;
}

double min_preact_margin(const MlpNet& net, const MlpCache& cache) {
    double margin = 1e300;
    const std::size_t layers = net.weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        const bool leaky = (l + 1 < layers) || net.spec.output_leaky;
        if (!leaky) continue;
        for (double v : cache.pre_acts[l].data) {
            margin = std::min(margin, std::fabs(v));
        }
    }
    return margin;
}

}  // namespace pce
