#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fdia {

enum class BusType { Slack, Pv, Pq };

struct Bus {
    int id = 0;               // positive, unique within a case
    BusType bus_type = BusType::Pq;
    double load_mw = 0.0;
    double base_kv = 0.0;
};

struct Branch {
    int from_bus = 0;
    int to_bus = 0;
    double reactance_pu = 0.0; // > 0
    bool in_service = true;
};

struct Generator {
    int bus = 0;
    double pmax_mw = 0.0; // >= 0
};

/// Validated network case. Immutable after construction; safe to share
/// across threads.
struct GridCase {
    double base_mva = 100.0;
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    std::vector<Generator> generators;

    int slack_bus_id() const;
    int bus_index(int bus_id) const; // -1 when absent
    std::size_t in_service_branch_count() const;
    std::vector<int> load_bus_ids() const; // buses with load_mw > 0, case order
};

/// Linear DC metering model z = Hx + e. One active-power flow meter per
/// in-service branch, metered at the from side. Columns cover non-slack
/// buses in case order; the slack angle is fixed at zero and carries no
/// column.
struct MeasurementModel {
    Eigen::MatrixXd h;              // m x (n-1), entries +-1/x
    Eigen::VectorXd w_diag;         // m noise variances, per-unit^2
    std::vector<int> meter_index;   // row -> index into case.branches
    std::vector<int> state_index;   // column -> index into case.buses

    std::size_t meter_count() const { return static_cast<std::size_t>(h.rows()); }
    std::size_t state_count() const { return static_cast<std::size_t>(h.cols()); }

    /// Column for a bus id, or -1 (slack and unknown buses have no state).
    int state_column(const GridCase& grid, int bus_id) const;
};

/// Parse a MATPOWER-subset case file: the baseMVA scalar plus the bus, gen
/// and branch numeric tables. `%` comments and arbitrary whitespace are
/// tolerated; columns beyond the ones used here are ignored.
GridCase parse_case(const std::string& text);

/// Canonical re-serialization of a case in the accepted input subset.
/// parse_case(render_case(c)) reproduces c.
std::string render_case(const GridCase& grid);

/// Build H and W for a case. Homoscedastic: w_diag[i] = noise_sigma^2.
MeasurementModel build_dc_model(const GridCase& grid, double noise_sigma);

} // namespace fdia
