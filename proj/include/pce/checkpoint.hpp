#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pce/pipeline.hpp"

namespace pce {

// Flat binary container: magic "PCEM", u32 version, then per tensor
// u32 name length, name bytes, u32 rows, u32 cols, row-major
// little-endian f64 data. Config scalars and counters ride along as
// 1x1 tensors so a checkpoint is self-describing.
struct NamedTensor {
    std::string name;
    Matrix value;
};

constexpr std::uint32_t kCheckpointVersion = 1;

void write_tensor_file(const std::string& path, const std::vector<NamedTensor>& tensors);
std::vector<NamedTensor> read_tensor_file(const std::string& path);

struct CheckpointState {
    Models models;
    TrainConfig config;
    int epochs_done = 0;
    std::uint64_t train_rng_counter = 0;
};

void save_checkpoint(const std::string& path, const Models& models,
                     const TrainConfig& cfg, int epochs_done,
                     std::uint64_t train_rng_counter);

// Rebuilds the models from the embedded config and validates every tensor
// shape against it.
CheckpointState load_checkpoint(const std::string& path);

}  // namespace pce
