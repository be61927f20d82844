#pragma once

#include <span>
#include <vector>

#include "pce/mlp.hpp"
#include "pce/models.hpp"

namespace pce {

enum class ContrastiveVariant { plain, margin, adaptive };

// Between-class margin delta_n and intra-class margin delta_m.
// Derived from a single margin m as (m, 1 - m).
struct MarginPair {
    double delta_n = 0.0;
    double delta_m = 0.0;
    static MarginPair from_margin(double m) { return {m, 1.0 - m}; }
};

struct LossWeights {
    double lambda_proto = 0.0;
    double beta_sem = 0.0;
    double phi_center = 0.0;
    double gp_coeff = 10.0;
};

// Re-scaling factors for the adaptive variant; clamped at the optimum and
// treated as stop-gradient constants in every backward pass.
double alpha_pos(double s, double m);  // max(1 + m - s, 0)
double alpha_neg(double s, double m);  // max(s + m, 0)

struct ProtoLossResult {
    double loss = 0.0;
    Matrix grad_protos;  // w.r.t. the unit-normalized prototype rows
    Matrix grad_z;       // w.r.t. the unit-normalized projections
    int active_protos = 0;
};

// Contrastive loss anchored on prototypes: mean over prototypes with at
// least one positive and one negative in the batch of
// log(1 + sum_n exp(g*w_n*(s_n - d_n)) * sum_m exp(-g*w_m*(s_m - d_m))).
// label_rows[i] is the prototype row of sample i.
ProtoLossResult proto_contrastive_loss(const Matrix& protos_unit, const Matrix& z_unit,
                                       std::span<const int> label_rows, double gamma_ins,
                                       ContrastiveVariant variant, MarginPair margins);

// Core with explicit per-pair scale factors (n_protos x batch), which the
// variants derive from the similarity matrix. Scales are constants to the
// backward pass; exposed so diagnostics can pin them.
ProtoLossResult proto_contrastive_with_scales(const Matrix& protos_unit,
                                              const Matrix& z_unit,
                                              std::span<const int> label_rows,
                                              double gamma_ins, MarginPair margins,
                                              const Matrix& neg_scale,
                                              const Matrix& pos_scale);

// Prototype-row/sample similarity matrix (n_protos x batch).
Matrix similarity_matrix(const Matrix& protos_unit, const Matrix& z_unit);

struct SemanticLossResult {
    double loss = 0.0;
    Matrix grad_scores;
};

// Mean over rows of -log softmax(gamma * scores) at the true column.
SemanticLossResult semantic_loss(const Matrix& scores, std::span<const int> label_cols,
                                 double gamma_sem);

struct CenterSemanticResult {
    double loss = 0.0;
    Matrix grad_h;
};

// Class means of h for classes present in the batch, scored against every
// attribute row; accumulates into rn grads and returns dL/dh.
CenterSemanticResult center_semantic_loss(MlpNet& rn, const Matrix& h,
                                          std::span<const int> label_cols,
                                          const Matrix& attrs, double gamma_sem);

// mean over rows of (||grad_x d([x_hat ; a])|| - 1)^2 for a fixed
// interpolate batch; accumulates the penalty's parameter gradient into the
// critic via a hand-derived second reverse pass.
double gradient_penalty_core(MlpNet& d, const Matrix& x_hat, const Matrix& attrs,
                             double grad_weight = 1.0);

// Draws one tau ~ U(0,1) per row, interpolates, and runs the core.
double gradient_penalty(MlpNet& d, const Matrix& x_real, const Matrix& x_fake,
                        const Matrix& attrs, Rng& rng, double grad_weight = 1.0);

struct CriticLossResult {
    double d_loss = 0.0;       // E[D(fake)] - E[D(real)] + gp_coeff * penalty
    double wasserstein = 0.0;  // E[D(real)] - E[D(fake)]
    double penalty = 0.0;
};

// Accumulates the full critic gradient (including the penalty term).
CriticLossResult wgan_critic_loss(MlpNet& d, const Matrix& x_real, const Matrix& x_fake,
                                  const Matrix& attrs, Rng& rng, double gp_coeff);

struct GeneratorTermResult {
    double g_loss = 0.0;  // -E[D(fake)]
    Matrix grad_x_fake;
};

// Critic parameters are left untouched; only the input gradient flows out.
GeneratorTermResult wgan_generator_term(const MlpNet& d, const Matrix& x_fake,
                                        const Matrix& attrs);

double total_loss(double wgan, double proto, double sem, double center,
                  const LossWeights& w);

}  // namespace pce
