#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "textalpha/features.hpp"
#include "textalpha/ingest.hpp"

namespace textalpha {

struct TrainingSchedule {
    int epochs = 10;
    double peak_lr = 5e-5;
    double weight_decay = 0.01;
    double epsilon = 1e-8;
    double beta1 = 0.9;
    double beta2 = 0.999;
    int batch_size = 32;
    bool full_batch = false;  // one step per epoch, no shuffling
    uint64_t seed = 0;
    int max_seq_len = kDefaultMaxSeqLen;

    std::string echo() const;  // key=value summary stored in model artifacts
};

struct RegressorModel {
    int hash_dim = kDefaultHashDim;
    std::vector<double> weights;
    double bias = 0.0;
    // Optimizer state, kept so training traces are auditable.
    std::vector<double> m_w, v_w;
    double m_b = 0.0, v_b = 0.0;
    int64_t step = 0;

    static RegressorModel zeros(int hash_dim);
};

double predict(const RegressorModel& model, const FeatureVector& fv);

// Linear warmup 0 -> peak over the first epoch's steps, then linear decay
// peak -> 0 over the remaining epochs; 0 at step 0 and at the final step,
// clamped to 0 past the end.
double lr_at(int64_t step, int64_t steps_per_epoch, const TrainingSchedule& schedule);

struct MseGradient {
    double loss = 0.0;
    std::vector<std::pair<uint32_t, double>> grad_w;  // sparse, sorted by index
    double grad_b = 0.0;
};

// Mean-squared-error loss and analytic gradient over a batch. Per-coordinate
// contributions are pairwise-summed, so a back-to-back duplicated batch
// yields the bit-identical mean gradient.
MseGradient mse_gradient(std::span<const FeatureVector> features, std::span<const double> labels,
                         const std::vector<double>& weights, double bias);

double mse_loss(std::span<const FeatureVector> features, std::span<const double> labels,
                const std::vector<double>& weights, double bias);

struct TrainResult {
    RegressorModel model;  // best-validation epoch (ties -> later)
    std::vector<double> train_loss;
    std::vector<double> val_loss;  // empty when no validation samples
    int best_epoch = -1;           // 0-based
    bool degenerate = false;       // identical labels and all-empty features
};

// AdamW (decoupled weight decay; the bias is not decayed) on MSE.
// Deterministic given the seed.
TrainResult train(std::span<const LabeledSample> train_samples,
                  std::span<const LabeledSample> val_samples, Horizon horizon,
                  const TrainingSchedule& schedule, int hash_dim = kDefaultHashDim);

// Versioned binary artifact: magic, hash_dim, bias, weights, schedule echo,
// and a fingerprint of the training data.
void save_model(std::ostream& out, const RegressorModel& model, const std::string& schedule_echo,
                uint64_t data_fingerprint);
struct LoadedModel {
    RegressorModel model;
    std::string schedule_echo;
    uint64_t data_fingerprint = 0;
};
LoadedModel load_model(std::istream& in);

uint64_t data_fingerprint(std::span<const LabeledSample> samples, Horizon horizon);

}  // namespace textalpha
