// Explicit finite-difference time stepping of the cubic-transformed equation
//   zeta_t = Lap(zeta) - (2/3)|grad zeta|^2/zeta
//            - (delta lambda^{2/3}/3^{4/3}) |grad zeta|^2/zeta^{4/3} - 1
// on slab and disk grids, with the min/max stop rules and quench detection.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "memsq/core.hpp"

namespace memsq {

// thrown when a stepper is handed a field with a non-positive interior value
// (a quench crossing inside the step)
struct NonPositiveField : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    Params params;
    std::shared_ptr<const Grid> grid;
    double dt;
    double stop_tol = 1e-10;
    long long max_steps = 400'000'000;
    std::vector<double> snapshot_times;  // sorted on use
    bool record_trace = false;           // per-step (t, min zeta) series
    int trace_stride = 1;

    RunConfig(const Params& p, std::shared_ptr<const Grid> g, double dt_);
    void validate() const;  // dt < h^2/4, stop_tol in (0, 1e-6]
};

enum class OutcomeKind { Quenched, Steady, BudgetExceeded };

struct TracePoint {
    double t;
    double min_zeta;
    int argmin;
};

struct QuenchOutcome {
    OutcomeKind kind = OutcomeKind::BudgetExceeded;
    double t_ex = 0.0;            // m*dt at the stop rule (Quenched/Steady)
    double t_interp = 0.0;        // linear threshold-crossing estimate (Quenched)
    double quench_node = 0.0;     // node coordinate of the argmin (Quenched)
    long long steps = 0;
    Field final_field;
    std::vector<Field> snapshots;
    std::vector<TracePoint> trace;
};

// uniform initial data zeta = 1/(3 lambda) at t = 0
Field initial_field(std::shared_ptr<const Grid> grid, const Params& p);

// one forward-Euler update; boundary nodes reset to 1/(3 lambda)
Field step_slab(const Field& field, const RunConfig& config);
// disk update with the (n-1)/r centered term, r = i*h, and the origin rule
// zeta_0 += (2n dt/h^2)(zeta_1 - zeta_0) - dt
Field step_disk(const Field& field, const RunConfig& config);

QuenchOutcome run(const RunConfig& config);

struct QuenchRow {
    double delta;
    double lambda;
    QuenchOutcome outcome;  // Steady rows carry t_ex of the settle time
};

// one row per (delta, lambda); Steady/budget rows are kept, not fatal
std::vector<QuenchRow> quench_time_table(const Domain& domain,
                                         const std::vector<double>& deltas,
                                         const std::vector<double>& lambdas,
                                         const RunConfig& config_template);

// nodewise u = 1 - (3 lambda zeta)^{1/3}
Field u_view(const Field& field, const Params& p);

// (t, max_x u) series from a recorded trace
std::vector<std::pair<double, double>> max_u_series(const QuenchOutcome& outcome,
                                                    const Params& p);

}  // namespace memsq
