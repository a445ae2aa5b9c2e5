#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fdia/grid.hpp"
#include "fdia/se.hpp"

namespace fdia {

struct AttackSpec {
    std::vector<int> target_buses; // non-empty, non-slack bus ids
    double scale = 1.1;            // > 0 and != 1; multiplier on the estimated state
};

/// Stealthy injection a = Hc. Constructed, never checked post-hoc: c is built
/// first and a is its exact image under H, so the Eq. a = Hc identity holds
/// to machine precision by construction.
struct AttackVector {
    Eigen::VectorXd a;      // length m, per-unit
    Eigen::VectorXd c;      // length n-1, radians; nonzero only at targets
    int label = 0;          // class id, 1..K-1 (0 is reserved for normal)
};

/// Build the injection biasing each target state to scale * x_hat[target].
/// The post-attack estimate satisfies wls_estimate(z + a) = x_hat + c.
AttackVector craft_fdia(const GridCase& grid, const MeasurementModel& model,
                        const StateVector& x_hat, const AttackSpec& spec, int label = 1);

/// z + a, input untouched.
MeasurementVector apply_attack(const MeasurementVector& z, const AttackVector& atk);

} // namespace fdia
