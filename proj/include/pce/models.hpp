#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pce/mlp.hpp"

namespace pce {

// Widths shared by the five networks. `hidden` is the generator /
// discriminator / embedder hidden width (4096 at paper scale).
struct NetDims {
    int feature_dim = 0;
    int attr_dim = 0;
    int noise_dim = 0;
    int hidden = 0;
    int embed_dim = 0;  // output width of the embedder
    int proj_dim = 0;   // output width of the projection head
};

MlpSpec generator_spec(const NetDims& d);      // [attr+noise, hidden, feature]
MlpSpec discriminator_spec(const NetDims& d);  // [feature+attr, hidden, 1]
MlpSpec embedding_spec(const NetDims& d);      // [feature, hidden, embed_dim]
MlpSpec projection_spec(const NetDims& d);     // [embed_dim, embed_dim, proj_dim]
MlpSpec relation_spec(const NetDims& d);       // [embed_dim+attr, embed_dim, 1]

// One learnable anchor per seen class, stored unnormalized; losses
// normalize rows in their forward pass.
struct PrototypeBank {
    Param protos;                // |S| x proj_dim
    std::vector<int> class_ids;  // row -> class id, ascending

    int row_for(int class_id) const;  // throws on unknown class
    std::vector<int> rows_for(std::span<const int> labels) const;
};

// Rows start as unit-normalized Gaussian vectors.
PrototypeBank init_prototypes(std::span<const int> seen_classes, int proj_dim, Rng& rng);

// n_per_class rows per attribute row, each net([a_c ; z]) with fresh noise;
// labels grouped per class in attrs order.
std::pair<Matrix, std::vector<int>> generate_features(const MlpNet& g,
                                                      const Matrix& attrs,
                                                      std::span<const int> class_ids,
                                                      int n_per_class, Rng& rng);

// Embedding then unit-norm projection: (embeddings, unit projections).
std::pair<Matrix, Matrix> embed(const MlpNet& embedder, const MlpNet& projector,
                                const Matrix& x);

// Score matrix (batch x n_attrs); entry (i, j) = rn([h_i ; a_j]), raw.
Matrix relation_scores(const MlpNet& rn, const Matrix& h, const Matrix& attrs,
                       MlpCache* cache = nullptr);

// Backward companion: dL/dscores -> dL/dh, accumulating into rn grads.
Matrix relation_scores_backward(MlpNet& rn, const MlpCache& cache,
                                const Matrix& grad_scores, std::size_t batch,
                                std::size_t n_attrs);

}  // namespace pce
