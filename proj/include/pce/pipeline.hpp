#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pce/data.hpp"
#include "pce/losses.hpp"
#include "pce/models.hpp"

namespace pce {

struct TrainConfig {
    std::uint64_t seed = 1;

    double lr = 5e-4;
    double beta1 = 0.5;
    double beta2 = 0.99;
    int batch_size = 128;
    int epochs = 20;
    int n_critic = 5;

    double gamma_ins = 80.0;
    double margin = 0.4;
    double gamma_sem = 10.0;
    LossWeights weights{0.001, 0.001, 0.001, 10.0};
    ContrastiveVariant variant = ContrastiveVariant::adaptive;

    int embed_dim = 64;
    int proj_dim = 32;
    int noise_dim = 16;
    int hidden_dim = 128;

    int n_synth_per_unseen = 200;
    double clf_lr = 1e-3;
    int clf_epochs = 100;

    void validate() const;  // throws ConfigError on bad values
};

struct EpochRecord {
    int epoch = 0;
    double d_loss = 0.0;
    double g_loss = 0.0;
    double proto = 0.0;
    double sem = 0.0;
    double center = 0.0;
    double seconds = 0.0;
};

struct TrainReport {
    std::vector<EpochRecord> epochs;
};

void write_report_csv(const TrainReport& report, const std::string& path);

struct Models {
    MlpNet generator;
    MlpNet critic;
    MlpNet embedder;
    MlpNet projector;
    MlpNet relation;
    PrototypeBank prototypes;
};

Models init_models(const TrainConfig& cfg, const GzslDataset& ds, Rng& rng);

// One critic minibatch update (d_loss with gradient penalty); returns d_loss.
double critic_update(Models& m, const Matrix& x_real, const Matrix& attrs,
                     const TrainConfig& cfg, Rng& rng);

struct GeneratorStepLosses {
    double g_loss = 0.0;
    double proto = 0.0;
    double sem = 0.0;
    double center = 0.0;
};

// One joint update of generator, embedder, projector, relation net and
// prototypes; contrastive/semantic terms run on real+fake features.
GeneratorStepLosses generator_update(Models& m, const GzslDataset& ds,
                                     std::span<const int> batch_idx,
                                     const TrainConfig& cfg, Rng& rng);

// Alternating training loop; deterministic under cfg.seed. `rng` carries the
// training stream so a resumed run continues where the checkpoint left off.
TrainReport train(Models& m, const GzslDataset& ds, const TrainConfig& cfg,
                  Rng& rng, int start_epoch = 0);

// n_per_class synthetic features per unseen class, labels aligned.
std::pair<Matrix, std::vector<int>> synthesize_unseen(const MlpNet& generator,
                                                      const GzslDataset& ds,
                                                      int n_per_class, Rng& rng);

// Embeddings (not projections) of real seen train samples plus synthetic
// unseen samples; ZSL mode keeps the synthetic part only.
std::pair<Matrix, std::vector<int>> build_classifier_trainset(
    const MlpNet& embedder, const GzslDataset& ds, const Matrix& synth_features,
    std::span<const int> synth_labels, bool zsl_only);

// Fixed child-stream offsets off the config seed.
constexpr std::uint64_t kStreamData = 1;
constexpr std::uint64_t kStreamInit = 2;
constexpr std::uint64_t kStreamTrain = 3;
constexpr std::uint64_t kStreamEval = 4;
constexpr std::uint64_t kStreamDump = 5;

}  // namespace pce
