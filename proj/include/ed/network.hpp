#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ed/rng.hpp"
#include "ed/tensor.hpp"

namespace ed {

struct DropoutPlan;  // dropout.hpp

enum class LayerKind : std::uint8_t {
    Conv = 0,
    MaxPool = 1,
    ReLU = 2,
    Flatten = 3,
    FullyConnected = 4,
};

const char* layer_kind_name(LayerKind kind);

struct Layer {
    LayerKind kind = LayerKind::ReLU;
    Tensor weights;  // Conv: [K,C,kh,kw]; FullyConnected: [out,in]
    Tensor bias;     // [K] / [out]
    int stride = 1;
    int pad = 0;
    int window = 0;

    bool has_params() const {
        return kind == LayerKind::Conv || kind == LayerKind::FullyConnected;
    }

    static Layer conv(int out_channels, int in_channels, int ksize, int stride, int pad);
    static Layer maxpool(int window, int stride);
    static Layer relu();
    static Layer flatten();
    static Layer fully_connected(int out, int in);
};

/// Sequential network. The weights present at construction are snapshotted
/// and never change afterwards; they back the conservative-filter metric
/// and travel with checkpoints.
class Network {
public:
    Network(std::vector<int> input_shape, std::vector<Layer> layers);

    // Rebuilds a network with an explicit initialization snapshot
    // (checkpoint loading); snapshot shapes must match the layer shapes.
    static Network restore(std::vector<int> input_shape, std::vector<Layer> layers,
                           std::vector<Tensor> initial_weights,
                           std::vector<Tensor> initial_biases);

    std::vector<int> input_shape;  // C,H,W
    std::vector<Layer> layers;

    const std::vector<Tensor>& initial_weights() const { return initial_weights_; }
    const std::vector<Tensor>& initial_biases() const { return initial_biases_; }

    /// Per-sample output shape of each layer ({C,H,W} or {N}).
    const std::vector<std::vector<int>>& out_shapes() const { return out_shapes_; }
    std::size_t out_width(int layer) const;  // flattened per-sample width
    int num_layers() const { return static_cast<int>(layers.size()); }

    /// Index of the layer whose output is masked by default: the ReLU
    /// following the first fully-connected layer.
    int default_dropout_layer() const;

    /// Index of the rectified output of the last conv layer (saliency maps).
    int last_conv_output_layer() const;

private:
    Network() = default;
    std::vector<Tensor> initial_weights_;
    std::vector<Tensor> initial_biases_;
    std::vector<std::vector<int>> out_shapes_;
    void infer_shapes();
    void snapshot_initial();
};

struct ForwardTrace {
    int batch = 0;
    // acts[0] is the input batch, acts[l+1] the output of layer l (after the
    // dropout mask when a plan applies at l).
    std::vector<Tensor> acts;
    // Per MaxPool layer: for each sample-local output element, the row-major
    // index of the winning input element within that sample's block.
    std::vector<std::vector<int>> pool_argmax;
    Tensor logits;  // [B,K]
    Tensor probs;   // [B,K] softmax rows
};

struct Gradients {
    std::vector<Tensor> weights;  // empty tensor for layers without params
    std::vector<Tensor> biases;
};

ForwardTrace forward(const Network& net, const Tensor& batch,
                     const DropoutPlan* plan = nullptr);

/// Re-runs the forward pass from the plan's dropout layer, reusing the
/// cached activations below it. Equivalent to forward(net, batch, plan)
/// when base was produced without a plan.
ForwardTrace forward_from_plan(const Network& net, const ForwardTrace& base,
                               const DropoutPlan& plan);

struct LossResult {
    double loss = 0.0;
    Tensor dlogits;  // (softmax - onehot) / B
};

LossResult loss_softmax_ce(const Tensor& logits, const std::vector<int>& labels);

Gradients backward(const Network& net, const ForwardTrace& trace, const Tensor& dlogits,
                   const DropoutPlan* plan = nullptr);

void sgd_step(Network& net, const Gradients& grads, float lr);

void save_checkpoint(const Network& net, const std::string& path);
Network load_checkpoint(const std::string& path);

/// Conv(32,5x5)-ReLU-Pool, Conv(32,5x5)-ReLU-Pool, Conv(64,5x5)-ReLU-Pool,
/// Flatten, FC(2048)-ReLU, FC(num_classes). He-normal initialization.
Network build_cnn2(int num_classes, const std::vector<int>& input_shape, Rng& rng);

/// Same topology scaled down (8/8/16 channels, 256-wide FC) for desk-scale runs.
Network build_cnn2_mini(int num_classes, const std::vector<int>& input_shape, Rng& rng);

}  // namespace ed
