#pragma once

#include <string>
#include <vector>

#include "ed/excitation.hpp"
#include "ed/rng.hpp"

namespace ed {

enum class DropoutStrategy {
    None,
    Standard,
    StandardPerImage,
    Curriculum,
    Excitation,
};

const char* strategy_name(DropoutStrategy s);
DropoutStrategy strategy_from_name(const std::string& name);  // ValidationError on unknown

/// Per-sample binary masks plus inverted-dropout rescale factors for one
/// layer's activations. mask entries are 0/1; rescale is 1/max(p, eps) on
/// retained neurons and exactly 1 on dropped ones.
struct DropoutPlan {
    DropoutStrategy strategy = DropoutStrategy::None;
    int layer_index = -1;
    double base_p = 1.0;
    double gamma = 0.0;
    int batch = 0;
    int width = 0;
    std::vector<float> masks;    // batch * width
    std::vector<float> rescale;  // batch * width

    float multiplier(int sample, int i) const {
        const std::size_t idx =
            static_cast<std::size_t>(sample) * static_cast<std::size_t>(width) +
            static_cast<std::size_t>(i);
        return masks[idx] * rescale[idx];
    }

    static DropoutPlan all_ones(int layer_index, int batch, int width);
};

// Floor for the inverted rescale 1/max(p, kRescaleEps).
inline constexpr double kRescaleEps = 0.01;

/// Retaining probability for a neuron with saliency p_eb in a layer of N
/// neurons and base retaining probability P:
///   p = 1 - ((1-P)*(N-1)*p_eb) / (((1-P)*N - 1)*p_eb + P)
/// clamped to [0,1]. p(0)=1, p(1)=0, p(1/N)=P.
double retain_prob_excitation(double p_eb, int n, double base_p);

/// Elementwise retain_prob_excitation over a saliency distribution.
std::vector<double> retention_vector(const SaliencyDistribution& dist, double base_p);

/// Exponential decay of the retaining probability from 1 toward p_bar:
///   (1 - p_bar) * exp(-gamma * t) + p_bar.
double curriculum_retain(long long t, double gamma, double p_bar);

/// Bernoulli masks from per-sample retention vectors (one vector per sample).
DropoutPlan make_masks(const std::vector<std::vector<double>>& retention, Rng& rng,
                       bool per_image);

/// Bernoulli masks from a scalar retaining probability. With per_image=false
/// a single mask is drawn and shared by the whole batch.
DropoutPlan make_masks(double retain_prob, int width, int batch_size, Rng& rng,
                       bool per_image);

}  // namespace ed
