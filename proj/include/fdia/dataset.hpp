#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fdia/grid.hpp"
#include "fdia/profiles.hpp"

namespace fdia {

/// Labeled feature table. Features are stored flat (row-major) because the
/// encoders and the kNN baseline stream over them; `sample(i)` gives a view.
/// Label 0 is normal operation; label k >= 1 is an attack on class_names[k].
struct Dataset {
    std::size_t feature_len = 0;
    std::vector<double> features;       // size() * feature_len
    std::vector<std::uint16_t> labels;
    std::vector<std::uint32_t> timesteps;
    std::vector<std::string> class_names;   // length K, index == label
    std::vector<std::string> feature_names; // length feature_len
    std::uint64_t seed = 0;

    std::size_t size() const { return labels.size(); }
    std::size_t num_classes() const { return class_names.size(); }
    std::span<const double> sample(std::size_t i) const {
        return {features.data() + i * feature_len, feature_len};
    }
    std::vector<std::size_t> class_counts() const;
};

struct DatasetConfig {
    std::vector<int> target_buses;  // ordered; class id k attacks target_buses[k-1]
    std::vector<double> scales;     // e.g. {0.9, 1.1}
    double noise_sigma = 0.02;      // per-unit
    std::size_t window_start = 0;   // first attacked timestep
    std::size_t window_len = 0;     // number of attacked timesteps
    double bdd_alpha = 0.01;        // normal samples are conditioned to pass at this rate
    std::uint64_t seed = 1;
};

/// Simulate the measurement stream and assemble the labeled table:
/// per timestep one normal sample (features = z ++ wls_estimate(z)), plus,
/// inside the attack window, one attacked sample per (target, scale) with
/// features = z_a ++ wls_estimate(z_a).
///
/// Normal samples are conditioned to pass the residual test at bdd_alpha
/// (noise redrawn from the timestep's substream on the rare draw that trips
/// it); attacked samples then pass it too, since the crafted injection
/// leaves the residual unchanged.
Dataset generate_dataset(const GridCase& grid, const LoadProfiles& profiles,
                         const DatasetConfig& config);

/// Stratified split indices: per class, a seeded shuffle assigns
/// round(fraction * count) samples to train (clamped so both sides keep at
/// least one). Returned index lists are sorted ascending.
struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
SplitIndices split_indices(const std::vector<std::uint16_t>& labels, std::size_t num_classes,
                           double train_fraction, std::uint64_t seed);

/// Materialized stratified split; union is the input, intersection empty.
std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double train_fraction,
                                          std::uint64_t seed);

/// Take the rows at `indices` (must be valid, ascending not required).
Dataset subset(const Dataset& ds, const std::vector<std::size_t>& indices);

/// Binary container, magic "FDIA": version, dims, little-endian f64
/// features, u16 labels, u32 timesteps. Byte-identical for identical inputs.
void write_dataset(const Dataset& ds, const std::string& path);
Dataset read_dataset(const std::string& path);

/// Sidecar manifest (JSON): class/feature names, seed, per-class counts and
/// the caller-provided config hash.
void write_dataset_manifest(const Dataset& ds, const std::string& path,
                            std::uint64_t config_hash);

} // namespace fdia
