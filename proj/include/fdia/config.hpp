#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdia/encode.hpp"

namespace fdia {

/// Everything a pipeline run needs, resolved from an INI-style config file
/// plus command-line overrides. All randomness is seeded from here; nothing
/// reads the clock.
struct PipelineConfig {
    // [case]
    std::string case_path = "data/case57.m";

    // [profiles]
    std::string profiles_mode = "synth"; // synth | import
    std::string profiles_csv;
    int days = 7;
    int step_minutes = 5;
    std::size_t t_steps = 0; // 0 = days * steps per day
    std::uint64_t profiles_seed = 1001;

    // [attack]
    std::vector<int> targets{2, 6, 10, 14, 19, 25, 31, 35, 38, 43, 47, 51, 57};
    std::vector<double> scales{0.9, 1.1};
    std::size_t window_start = 1728;
    std::size_t window_len = 288;

    // [noise]
    double noise_sigma = 0.02;
    double bdd_alpha = 0.01;
    std::uint64_t data_seed = 1;

    // [encoder]
    std::string encoder_kind = "rp"; // gaf | rp
    std::string rp_mode = "distance";
    double rp_epsilon = 0.1;
    int image_hw = 0; // 0 = native feature length

    // [network]
    std::string network_preset = "paper_cnn"; // paper_cnn | desk_cnn | mlp
    bool batchnorm = true;
    int dense_units = 128;
    std::vector<int> mlp_hidden{64, 128};
    std::uint64_t network_seed = 7;

    // [train]
    int batch_size = 128;
    int epochs = 200;
    double learning_rate = 1e-3;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t train_seed = 7;
    int checkpoint_every = 0;
    double early_stop_train_acc = 0.0;

    // [split]
    double split_fraction = 0.7;
    std::uint64_t split_seed = 99;

    // [knn]
    int knn_k = 5;

    // [output]
    std::string output_dir = "out";

    EncoderParams encoder_params() const;

    /// Fixed-order key=value dump; hashing it gives the config hash recorded
    /// in manifests.
    std::string canonical_text() const;
    std::uint64_t hash() const;
};

/// Parse the INI text (sections, key = value, '#'/';' comments). Unknown
/// sections or keys are rejected so typos cannot silently fall back to
/// defaults.
PipelineConfig parse_config(const std::string& text);
PipelineConfig load_config(const std::string& path);

/// Apply a "section.key=value" override on top of a loaded config.
void apply_override(PipelineConfig& config, const std::string& assignment);

} // namespace fdia
