#include "pce/param.hpp"

#include <cmath>
#include <stdexcept>

namespace pce {

void adam_step(Param& p, const AdamConfig& cfg) {
    if (cfg.lr <= 0.0) {
        throw std::runtime_error("adam_step: lr must be positive");
    }
    p.step_count += 1;
    const double t = static_cast<double>(p.step_count);
    const double bc1 = 1.0 - std::pow(cfg.beta1, t);
    const double bc2 = 1.0 - std::pow(cfg.beta2, t);
    for (std::size_t i = 0; i < p.value.size(); ++i) {
        const double g = p.grad.data[i];
        double& m = p.adam_m.data[i];
        double& v = p.adam_v.data[i];
        m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g;
        const double m_hat = m / bc1;
        const double v_hat = v / bc2;
        p.value.data[i] -= cfg.lr * m_hat / (std::sqrt(v_hat) + cfg.eps);
    }
}

}  // namespace pce
