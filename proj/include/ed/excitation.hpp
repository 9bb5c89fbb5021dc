#pragma once

#include <span>
#include <vector>

#include "ed/network.hpp"

namespace ed {

/// Saliency over one layer's neurons for one sample: nonnegative, sums to 1
/// (conv layers flattened C*H*W row-major). Kept in double so layer sums and
/// entropies stay exact at width 2048.
struct SaliencyDistribution {
    int layer_index = -1;  // distribution over the output of this layer
    int sample_index = 0;
    std::vector<double> probs;
};

/// Starting distribution over the output units: a single class (one-hot) or
/// an explicit probability vector.
struct OutputPrior {
    int class_index = -1;
    std::vector<double> probs;  // used when non-empty

    static OutputPrior for_class(int c) { return OutputPrior{c, {}}; }
    static OutputPrior distribution(std::vector<double> p) {
        return OutputPrior{-1, std::move(p)};
    }
};

/// One parent's share, p = parent_prob * Z * a_i * w_i for w_i >= 0 and 0
/// otherwise, with Z normalizing the nonnegative-weight terms to 1. All
/// zeros when no positive term exists.
std::vector<double> eb_conditional(double parent_prob,
                                   std::span<const float> child_activations,
                                   std::span<const float> weights_into_parent);

/// Propagates the prior from the output layer down to target_layer, summing
/// each child's shares over its parents layer by layer. Mass lost to parents
/// with no excitatory path is restored by renormalizing the layer
/// distribution. Returns the distribution over the output of target_layer.
SaliencyDistribution excitation_backprop(const Network& net, const ForwardTrace& trace,
                                         const OutputPrior& prior, int target_layer,
                                         int sample);

/// Channel-summed H x W map of a conv-layer distribution.
Tensor spatial_saliency_map(const SaliencyDistribution& dist,
                            const std::vector<int>& layer_shape);

}  // namespace ed
