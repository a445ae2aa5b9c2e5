#pragma once

#include <Eigen/Dense>

#include "fdia/grid.hpp"

namespace fdia {

/// Non-slack bus angles in radians, ordered by MeasurementModel::state_index.
/// The slack angle is identically zero and not stored.
using StateVector = Eigen::VectorXd;

/// Per-unit active branch flows, ordered by MeasurementModel::meter_index.
using MeasurementVector = Eigen::VectorXd;

struct PowerFlowResult {
    StateVector angles_rad;
    MeasurementVector flows_pu; // exact, noise free
};

struct BddResult {
    double residual_norm = 0.0;
    double threshold = 0.0;
    bool flagged = false; // residual_norm > threshold
};

/// DC power flow: dispatches generation proportionally to pmax to balance
/// the given loads, then solves the reduced susceptance system B' theta = P
/// for non-slack angles. bus_loads_pu is indexed like grid.buses.
PowerFlowResult dc_power_flow(const GridCase& grid, const Eigen::VectorXd& bus_loads_pu);

/// WLS estimator with a cached orthogonal factorization of W^{-1/2} H.
/// Building one solver per model and reusing it across many measurement
/// snapshots avoids refactoring an unchanged H. All methods are const and
/// safe to call concurrently.
class WlsSolver {
public:
    explicit WlsSolver(const MeasurementModel& model);

    /// Exact WLS minimizer of ||W^{-1/2}(z - Hx)||. Throws ValidationError
    /// when the network is unobservable (rank-deficient normal equations).
    StateVector estimate(const MeasurementVector& z) const;

    /// Euclidean norm of z - H x_hat (unweighted, as used by the residual test).
    double residual_norm(const MeasurementVector& z, const StateVector& x_hat) const;

    /// Detection threshold tau = sigma * sqrt(chi2_inv(1 - alpha, m - (n-1))).
    /// Valid for the homoscedastic model (w_diag = sigma^2 I).
    double bdd_threshold(double alpha) const;

    BddResult bdd_check(const MeasurementVector& z, const StateVector& x_hat,
                        double alpha) const;

    const MeasurementModel& model() const { return *model_; }

private:
    const MeasurementModel* model_;
    Eigen::MatrixXd h_scaled_; // W^{-1/2} H
    Eigen::VectorXd w_inv_sqrt_;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

/// One-shot conveniences over a temporary solver.
StateVector wls_estimate(const MeasurementModel& model, const MeasurementVector& z);
double bdd_residual(const MeasurementModel& model, const MeasurementVector& z,
                    const StateVector& x_hat);
double bdd_threshold(const MeasurementModel& model, double alpha);

} // namespace fdia
