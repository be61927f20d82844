#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pce/matrix.hpp"
#include "pce/rng.hpp"

namespace pce {

struct GzslDataset {
    Matrix features;                 // N x feature_dim
    std::vector<int> labels;         // N, indexing attribute rows
    Matrix attributes;               // n_classes x attr_dim
    std::vector<int> seen_classes;   // sorted, disjoint from unseen
    std::vector<int> unseen_classes; // sorted
    std::vector<int> train_idx;
    std::vector<int> test_seen_idx;
    std::vector<int> test_unseen_idx;

    std::size_t num_samples() const { return features.rows; }
    int num_classes() const { return static_cast<int>(attributes.rows); }
    int feature_dim() const { return static_cast<int>(features.cols); }
    int attr_dim() const { return static_cast<int>(attributes.cols); }

    // Enforced on every construction path; throws naming the violation.
    void validate() const;

    Matrix attrs_for_labels(std::span<const int> lbls) const;
    Matrix attrs_for_classes(std::span<const int> class_ids) const;
};

struct SyntheticSpec {
    int n_seen = 10;
    int n_unseen = 3;
    int attr_dim = 20;
    int feature_dim = 64;
    int samples_per_class = 200;
    double noise_sigma = 0.3;
    double class_overlap = 0.25;  // pulls attribute rows toward their mean
    std::uint64_t seed = 1;
};

// Unit-norm Gaussian attribute rows, class means through a fixed random
// linear map, Gaussian feature noise; 80/20 seen train/test split, all
// unseen samples to test_unseen.
GzslDataset generate_synthetic(const SyntheticSpec& spec);

GzslDataset load_dataset(const std::string& features_path,
                         const std::string& attributes_path,
                         const std::string& splits_path);
GzslDataset load_dataset_dir(const std::string& dir);

// Writes features.csv, attributes.csv, splits.txt; creates the directory.
void save_dataset(const GzslDataset& ds, const std::string& dir);

// Deterministic Fisher-Yates shuffle of the index vector.
std::vector<int> shuffled_epoch(std::span<const int> idx, Rng& rng);

}  // namespace pce
