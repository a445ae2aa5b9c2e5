#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fdia::nn {

/// Dense row-major tensor of doubles. Layout for 4D is (batch, channel,
/// height, width); for 2D it is (batch, features).
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), 0.0);
    }
    static std::size_t numel_of(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (auto d : s) n *= d;
        return n;
    }
    std::size_t numel() const { return data.size(); }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

enum class LayerKind : std::uint32_t {
    Conv2d = 0,
    Relu = 1,
    BatchNorm = 2,
    MaxPool = 3,
    Dropout = 4,
    Flatten = 5,
    Dense = 6,
    Softmax = 7,
};

const char* layer_kind_name(LayerKind kind);

struct LayerSpec {
    LayerKind kind = LayerKind::Relu;
    // conv
    int filters = 0;
    int kernel_hw = 3;
    int stride = 1;
    int padding = 0;
    // maxpool
    int pool_window = 2;
    int pool_stride = 2;
    // dropout
    double rate = 0.25;
    // dense
    int units = 0;

    static LayerSpec conv2d(int filters, int kernel_hw = 3, int stride = 1, int padding = 1);
    static LayerSpec relu();
    static LayerSpec batchnorm();
    static LayerSpec maxpool(int window = 2, int stride = 2);
    static LayerSpec dropout(double rate);
    static LayerSpec flatten();
    static LayerSpec dense(int units);
    static LayerSpec softmax();
};

/// Layer stack plus parameters and batchnorm running statistics. Shapes are
/// chain-checked at build time; forward/backward assume they hold.
struct ClassifierModel {
    std::vector<LayerSpec> layers;
    std::vector<std::vector<Tensor>> params;   // trainable tensors per layer
    std::vector<std::vector<Tensor>> bn_stats; // {running_mean, running_var} per bn layer
    std::vector<std::size_t> input_shape;      // per-sample shape, no batch dim
    int num_classes = 0;
    std::uint64_t rng_seed = 0;
    /// Frozen batchnorm uses running statistics even in training mode and
    /// treats them as constants in backward (gradient-check mode).
    bool bn_frozen = false;

    std::size_t parameter_count() const;
};

/// Build a model from an explicit spec list (shapes validated, parameters
/// initialized with fan-in scaled uniform draws from `seed`).
ClassifierModel build_model(std::vector<LayerSpec> layers,
                            std::vector<std::size_t> input_shape, int num_classes,
                            std::uint64_t seed);

/// The image classifier: conv 32/32 + pool + conv 64/64 + pool + conv 128
/// (3x3 kernels, stride 1, same padding), batchnorm after every conv ReLU
/// (switchable), dropout 0.25, one hidden dense layer, softmax head.
ClassifierModel build_paper_cnn(int input_hw, int channels, int num_classes,
                                std::uint64_t seed, bool batchnorm = true,
                                int dense_units = 128);

/// Same stack at reduced width (8/8/16/16/32 filters, 64 dense units) for
/// CPU-scale runs.
ClassifierModel build_desk_cnn(int input_hw, int channels, int num_classes,
                               std::uint64_t seed, bool batchnorm = true);

/// dense(h1) -> relu -> ... -> dense(K) -> softmax over flat feature vectors.
ClassifierModel build_mlp_baseline(int input_len, const std::vector<int>& hidden,
                                   int num_classes, std::uint64_t seed);

/// Identifies the dropout-mask substream so training is reproducible and
/// checkpoint-resumable: masks depend only on (seed, epoch, batch, layer).
struct ForwardContext {
    bool training = false;
    std::uint64_t dropout_seed = 0;
    std::uint64_t epoch = 0;
    std::uint64_t batch = 0;
};

/// Per-layer caches produced by forward and consumed by backward.
struct ForwardTrace;

/// Batchnorm variance floor; exposed so the frozen affine map is invertible
/// from the outside (stats + parameters fully determine the transform).
inline constexpr double kBatchNormEps = 1e-5;

/// Run the stack. x is (batch, ...input_shape). Returns (batch, K)
/// probabilities (the softmax head is applied). Inference mode is
/// deterministic; training mode enables dropout and batch statistics.
Tensor forward(const ClassifierModel& model, const Tensor& x, const ForwardContext& ctx);
Tensor forward(const ClassifierModel& model, const Tensor& x, bool training);

/// Same, but stops before the terminal softmax.
Tensor forward_logits(const ClassifierModel& model, const Tensor& x,
                      const ForwardContext& ctx);

struct Gradients {
    std::vector<std::vector<Tensor>> g; // same shapes as model.params
};

/// Categorical cross-entropy (softmax fused) and reverse-mode gradients for
/// every trainable tensor. labels_onehot is (batch, K). In training mode the
/// batchnorm running statistics of `model` are updated as a side effect.
/// When d_input is given it receives the loss gradient w.r.t. x.
std::pair<double, Gradients> loss_and_gradients(ClassifierModel& model, const Tensor& x,
                                                const Tensor& labels_onehot,
                                                const ForwardContext& ctx,
                                                Tensor* d_input = nullptr);

Tensor one_hot(const std::vector<int>& labels, int num_classes);

// ----------------------------------------------------------------------------
// Optimization and training
// ----------------------------------------------------------------------------

struct TrainConfig {
    int batch_size = 128;
    int epochs = 200;
    double learning_rate = 1e-3;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t seed = 0;
    int checkpoint_every = 0;          // epochs; 0 disables
    std::string checkpoint_path;
    double early_stop_train_acc = 0.0; // stop once reached; 0 disables
};

struct AdamState {
    std::vector<std::vector<Tensor>> m, v;
    std::uint64_t t = 0; // completed steps
};

AdamState make_adam_state(const ClassifierModel& model);

/// One bias-corrected Adam update; state.t is incremented.
void adam_step(ClassifierModel& model, const Gradients& grads, const TrainConfig& config,
               AdamState& state);

struct EpochStats {
    int epoch = 0;
    double loss = 0.0;
    double train_acc = 0.0;
    double val_acc = -1.0; // -1 when no validation set was given
};

/// Return false to stop training after the current epoch.
using EpochCallback = std::function<bool(const EpochStats&)>;

/// Optimizer state plus the next epoch index; lets a checkpoint resume
/// reproduce the uninterrupted run bitwise.
struct TrainerState {
    AdamState adam;
    std::uint64_t next_epoch = 0;
};

/// Seeded-shuffle minibatch training. Inputs are per-sample tensors (all the
/// same shape); accuracy entries are computed with inference-mode forward
/// passes. Aborts with epoch/batch context on a non-finite loss.
std::vector<EpochStats> train(ClassifierModel& model, const std::vector<Tensor>& inputs,
                              const std::vector<int>& labels, const TrainConfig& config,
                              const std::vector<Tensor>* val_inputs = nullptr,
                              const std::vector<int>* val_labels = nullptr,
                              const EpochCallback& callback = {},
                              TrainerState* state = nullptr);

struct Prediction {
    std::vector<int> labels;
    Tensor probabilities; // (N, K)
};

/// Argmax over class probabilities; ties break toward the lowest class index.
Prediction predict(const ClassifierModel& model, const std::vector<Tensor>& inputs,
                   int batch_size = 256);

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

void write_history_csv(const std::vector<EpochStats>& history, const std::string& path);

// ----------------------------------------------------------------------------
// Checkpointing ("FDNN" container)
// ----------------------------------------------------------------------------

void save_model(const ClassifierModel& model, const std::string& path,
                const TrainerState* state = nullptr);

struct LoadedModel {
    ClassifierModel model;
    std::optional<TrainerState> state;
};
LoadedModel load_model(const std::string& path);

} // namespace fdia::nn
