#pragma once

#include <span>
#include <string>
#include <vector>

#include "pce/data.hpp"
#include "pce/param.hpp"
#include "pce/pipeline.hpp"

namespace pce {

// Per-class top-1 accuracies in percent. H is the harmonic mean of U and S;
// T is the conventional ZSL accuracy.
struct MetricBlock {
    double u = 0.0;
    double s = 0.0;
    double h = 0.0;
    double t = 0.0;
};

// Single linear layer + softmax cross-entropy over a fixed class list.
struct SoftmaxClassifier {
    Param weight;                // dim x n_classes
    Param bias;                  // 1 x n_classes
    std::vector<int> class_ids;  // column -> class id, ascending
};

SoftmaxClassifier train_softmax_classifier(const Matrix& x, std::span<const int> labels,
                                           std::span<const int> class_ids, double lr,
                                           int epochs, Rng& rng);

// Cross-entropy value and gradient for one full-batch step (exposed for
// gradient verification).
double softmax_xent_batch(const SoftmaxClassifier& clf, const Matrix& x,
                          std::span<const int> label_cols, Matrix* grad_w,
                          Matrix* grad_b);

// Argmax class ids; ties go to the lowest class id.
std::vector<int> predict(const SoftmaxClassifier& clf, const Matrix& x);

// Mean over classes in class_set of per-class accuracy, in percent.
// Every class in class_set must have at least one sample.
double per_class_top1(std::span<const int> predictions, std::span<const int> labels,
                      std::span<const int> class_set);
double per_class_top1(const SoftmaxClassifier& clf, const Matrix& x,
                      std::span<const int> labels, std::span<const int> class_set);

double harmonic_mean(double u, double s);

// Full protocol: GZSL classifier over seen+unseen for U/S/H plus a separate
// unseen-only classifier for T.
MetricBlock evaluate(const Models& models, const GzslDataset& ds,
                     const TrainConfig& cfg);

// Metrics CSV row; empty fields for metrics a mode does not produce.
std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& setting, const MetricBlock& mb,
                            bool zsl_only);

}  // namespace pce
