#include "textalpha/regressor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "textalpha/errors.hpp"
#include "textalpha/hashing.hpp"
#include "textalpha/rng.hpp"
#include "textalpha/util.hpp"

namespace textalpha {

std::string TrainingSchedule::echo() const {
    std::string s;
    s += "epochs=" + std::to_string(epochs);
    s += ";peak_lr=" + fmt_g12(peak_lr);
    s += ";weight_decay=" + fmt_g12(weight_decay);
    s += ";epsilon=" + fmt_g12(epsilon);
    s += ";beta1=" + fmt_g12(beta1);
    s += ";beta2=" + fmt_g12(beta2);
    s += ";batch_size=" + std::to_string(batch_size);
    s += ";full_batch=" + std::string(full_batch ? "1" : "0");
    s += ";seed=" + std::to_string(seed);
    s += ";max_seq_len=" + std::to_string(max_seq_len);
    return s;
}

RegressorModel RegressorModel::zeros(int hash_dim) {
    RegressorModel m;
    m.hash_dim = hash_dim;
    m.weights.assign(hash_dim, 0.0);
    m.m_w.assign(hash_dim, 0.0);
    m.v_w.assign(hash_dim, 0.0);
    return m;
}

double predict(const RegressorModel& model, const FeatureVector& fv) {
    return dot(fv, model.weights) + model.bias;
}

double lr_at(int64_t step, int64_t steps_per_epoch, const TrainingSchedule& schedule) {
    if (step < 0) throw InvariantError("lr_at: negative step");
    if (steps_per_epoch < 1) throw InvariantError("lr_at: steps_per_epoch must be >= 1");
    const int64_t warmup = steps_per_epoch;
    const int64_t total = steps_per_epoch * schedule.epochs;
    if (step >= total) return 0.0;
    if (step <= warmup)
        return schedule.peak_lr * (static_cast<double>(step) / static_cast<double>(warmup));
    return schedule.peak_lr *
           (static_cast<double>(total - step) / static_cast<double>(total - warmup));
}

MseGradient mse_gradient(std::span<const FeatureVector> features, std::span<const double> labels,
                         const std::vector<double>& weights, double bias) {
    const size_t n = features.size();
    if (n == 0 || n != labels.size()) throw InvariantError("mse_gradient: bad batch");

    std::vector<double> sq(n), db(n);
    std::vector<std::pair<uint32_t, double>> coo;
    for (size_t i = 0; i < n; ++i) {
        double err = dot(features[i], weights) + bias - labels[i];
        sq[i] = err * err;
        db[i] = 2.0 * err;
        for (const auto& [idx, c] : features[i].entries) coo.emplace_back(idx, 2.0 * err * c);
    }
    std::stable_sort(coo.begin(), coo.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    MseGradient g;
    g.loss = pairwise_sum(sq) / static_cast<double>(n);
    g.grad_b = pairwise_sum(db) / static_cast<double>(n);
    std::vector<double> run;
    for (size_t i = 0; i < coo.size();) {
        size_t j = i;
        run.clear();
        while (j < coo.size() && coo[j].first == coo[i].first) run.push_back(coo[j++].second);
        g.grad_w.emplace_back(coo[i].first, pairwise_sum(run) / static_cast<double>(n));
        i = j;
    }
    return g;
}

double mse_loss(std::span<const FeatureVector> features, std::span<const double> labels,
                const std::vector<double>& weights, double bias) {
    std::vector<double> sq(features.size());
    for (size_t i = 0; i < features.size(); ++i) {
        double err = dot(features[i], weights) + bias - labels[i];
        sq[i] = err * err;
    }
    return pairwise_sum(sq) / static_cast<double>(features.size());
}

namespace {

struct Prepared {
    std::vector<FeatureVector> features;
    std::vector<double> labels;
};

Prepared prepare(std::span<const LabeledSample> samples, Horizon horizon,
                 const TrainingSchedule& schedule, int hash_dim) {
    Prepared p;
    for (const auto& s : samples) {
        auto it = s.labels.find(horizon.trading_days);
        if (it == s.labels.end()) continue;
        p.features.push_back(featurize_text(s.text, schedule.max_seq_len, hash_dim));
        p.labels.push_back(it->second);
    }
    return p;
}

// One AdamW step. Gradient is sparse; moments and decay are applied densely.
void adamw_step(RegressorModel& model, const MseGradient& g, double lr,
                const TrainingSchedule& sch) {
    model.step += 1;
    const double bc1 = 1.0 - std::pow(sch.beta1, static_cast<double>(model.step));
    const double bc2 = 1.0 - std::pow(sch.beta2, static_cast<double>(model.step));

    size_t k = 0;
    const int d = model.hash_dim;
    for (int j = 0; j < d; ++j) {
        double gj = 0.0;
        if (k < g.grad_w.size() && g.grad_w[k].first == static_cast<uint32_t>(j))
            gj = g.grad_w[k++].second;
        double& m = model.m_w[j];
        double& v = model.v_w[j];
        m = sch.beta1 * m + (1.0 - sch.beta1) * gj;
        v = sch.beta2 * v + (1.0 - sch.beta2) * gj * gj;
        const double mhat = m / bc1;
        const double vhat = v / bc2;
        model.weights[j] -= lr * (mhat / (std::sqrt(vhat) + sch.epsilon) +
                                  sch.weight_decay * model.weights[j]);
    }
    model.m_b = sch.beta1 * model.m_b + (1.0 - sch.beta1) * g.grad_b;
    model.v_b = sch.beta2 * model.v_b + (1.0 - sch.beta2) * g.grad_b * g.grad_b;
    const double mhat = model.m_b / bc1;
    const double vhat = model.v_b / bc2;
    model.bias -= lr * (mhat / (std::sqrt(vhat) + sch.epsilon));  // no decay on the bias
}

}  // namespace

TrainResult train(std::span<const LabeledSample> train_samples,
                  std::span<const LabeledSample> val_samples, Horizon horizon,
                  const TrainingSchedule& schedule, int hash_dim) {
    if (schedule.epochs < 1) throw InvariantError("schedule.epochs must be >= 1");
    if (schedule.peak_lr <= 0.0) throw InvariantError("schedule.peak_lr must be > 0");

    Prepared tr = prepare(train_samples, horizon, schedule, hash_dim);
    Prepared va = prepare(val_samples, horizon, schedule, hash_dim);
    const size_t n = tr.features.size();
    if (n == 0)
        throw InsufficientDataError("no training sample carries a label for horizon " +
                                    std::to_string(horizon.trading_days));

    TrainResult out;
    out.degenerate = std::all_of(tr.features.begin(), tr.features.end(),
                                 [](const FeatureVector& f) { return f.empty(); }) &&
                     std::all_of(tr.labels.begin(), tr.labels.end(),
                                 [&](double y) { return y == tr.labels.front(); });

    RegressorModel model = RegressorModel::zeros(hash_dim);
    const int64_t steps_per_epoch =
        schedule.full_batch
            ? 1
            : static_cast<int64_t>((n + schedule.batch_size - 1) / schedule.batch_size);

    Rng rng(schedule.seed);
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;

    RegressorModel best;
    double best_val = 0.0;
    int64_t global_step = 0;

    std::vector<FeatureVector> bx;
    std::vector<double> by;
    for (int epoch = 0; epoch < schedule.epochs; ++epoch) {
        if (!schedule.full_batch) rng.shuffle(order);
        const size_t bsz = schedule.full_batch ? n : static_cast<size_t>(schedule.batch_size);
        for (size_t start = 0; start < n; start += bsz) {
            const size_t stop = std::min(n, start + bsz);
            bx.clear();
            by.clear();
            for (size_t i = start; i < stop; ++i) {
                bx.push_back(tr.features[order[i]]);
                by.push_back(tr.labels[order[i]]);
            }
            MseGradient g = mse_gradient(bx, by, model.weights, model.bias);
            adamw_step(model, g, lr_at(global_step, steps_per_epoch, schedule), schedule);
            ++global_step;
        }
        out.train_loss.push_back(mse_loss(tr.features, tr.labels, model.weights, model.bias));
        if (!va.features.empty()) {
            double vl = mse_loss(va.features, va.labels, model.weights, model.bias);
            out.val_loss.push_back(vl);
            if (out.best_epoch < 0 || vl <= best_val) {  // ties -> later epoch
                best_val = vl;
                best = model;
                out.best_epoch = epoch;
            }
        }
    }
    if (va.features.empty()) {
        out.best_epoch = schedule.epochs - 1;
        out.model = std::move(model);
    } else {
        out.model = std::move(best);
    }
    return out;
}

namespace {

const char kModelMagic[8] = {'T', 'X', 'A', 'L', 'F', 'M', '0', '1'};

template <typename T>
void put(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void get(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw DataFormatError("model artifact truncated");
}

}  // namespace

void save_model(std::ostream& out, const RegressorModel& model, const std::string& schedule_echo,
                uint64_t fingerprint) {
    out.write(kModelMagic, sizeof(kModelMagic));
    put(out, static_cast<uint32_t>(model.hash_dim));
    put(out, model.bias);
    out.write(reinterpret_cast<const char*>(model.weights.data()),
              static_cast<std::streamsize>(model.weights.size() * sizeof(double)));
    put(out, static_cast<uint32_t>(schedule_echo.size()));
    out.write(schedule_echo.data(), static_cast<std::streamsize>(schedule_echo.size()));
    put(out, fingerprint);
}

LoadedModel load_model(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kModelMagic, sizeof(magic)) != 0)
        throw DataFormatError("not a model artifact (bad magic)");
    LoadedModel lm;
    uint32_t dim = 0;
    get(in, dim);
    if (dim == 0 || dim > (1u << 28)) throw DataFormatError("model artifact: bad dimension");
    lm.model.hash_dim = static_cast<int>(dim);
    get(in, lm.model.bias);
    lm.model.weights.resize(dim);
    in.read(reinterpret_cast<char*>(lm.model.weights.data()),
            static_cast<std::streamsize>(dim * sizeof(double)));
    if (!in) throw DataFormatError("model artifact truncated");
    uint32_t echo_len = 0;
    get(in, echo_len);
    lm.schedule_echo.resize(echo_len);
    in.read(lm.schedule_echo.data(), echo_len);
    if (!in) throw DataFormatError("model artifact truncated");
    get(in, lm.data_fingerprint);
    for (double w : lm.model.weights)
        if (!std::isfinite(w)) throw DataFormatError("model artifact: non-finite weight");
    lm.model.m_w.assign(dim, 0.0);
    lm.model.v_w.assign(dim, 0.0);
    return lm;
}

uint64_t data_fingerprint(std::span<const LabeledSample> samples, Horizon horizon) {
    uint64_t h = fnv1a64("v1");
    for (const auto& s : samples) {
        h = fnv1a64(s.stock_id(), h);
        h = fnv1a64(s.anchor_date().str(), h);
        auto it = s.labels.find(horizon.trading_days);
        if (it != s.labels.end()) {
            uint64_t bits;
            std::memcpy(&bits, &it->second, sizeof(bits));
            char b[8];
            std::memcpy(b, &bits, 8);
            h = fnv1a64(std::string_view(b, 8), h);
        }
    }
    return h;
}

}  // namespace textalpha
