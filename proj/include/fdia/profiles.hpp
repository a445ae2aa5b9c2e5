#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fdia/grid.hpp"

namespace fdia {

/// Per-bus load time series in MW. Only buses with nonzero nominal load
/// carry a series; everything else is treated as zero load at every step.
/// Series are stored in case bus order so iteration is deterministic.
struct LoadProfiles {
    int step_minutes = 5;
    std::vector<std::pair<int, std::vector<double>>> series; // bus id -> MW per step

    std::size_t step_count() const { return series.empty() ? 0 : series.front().second.size(); }
    const std::vector<double>* find(int bus_id) const {
        for (const auto& [id, s] : series)
            if (id == bus_id) return &s;
        return nullptr;
    }
};

/// Import profiles from CSV (header of profile names, rows of MW values).
/// Profiles are assigned to load buses round-robin and rescaled so each
/// bus's time average equals its nominal case load.
LoadProfiles import_profiles(const std::string& csv, const GridCase& grid);

/// Deterministic synthetic profiles: daily double-peak sinusoid with AR(1)
/// noise per bus, scaled to nominal loads and clamped to [0.3, 1.7] x nominal.
/// total_steps need not be a whole number of days; the generator simply
/// continues the daily pattern.
LoadProfiles synth_profiles_steps(const GridCase& grid, std::size_t total_steps,
                                  int step_minutes, std::uint64_t seed);

/// Whole-day convenience wrapper (days * steps-per-day samples).
LoadProfiles synth_profiles(const GridCase& grid, int days, int step_minutes,
                            std::uint64_t seed);

} // namespace fdia
