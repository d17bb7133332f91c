#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/curve.hpp"
#include "core/diagnostics.hpp"
#include "core/linsolve.hpp"

namespace dewet {

// Physical and numerical parameters of a run. sigma = cos(theta_young) is
// the wetting constant, eta the contact-line mobility, tau the time step.
struct SimParams {
    double sigma = 0.0;
    double eta = 100.0;
    double tau = 1e-3;
    LinearBackend backend = LinearBackend::Direct;

    double young_angle() const;  // arccos(sigma)
    void validate() const;
};

// Solvability conditions checked before each assembly: the first and last
// segments must not both be horizontal, and no segment may collapse.
struct AssumptionCheck {
    bool endpoint_normals_ok = false;
    bool segments_ok = false;
    bool ok() const { return endpoint_normals_ok && segments_ok; }
};
AssumptionCheck check_assumption(const OpenCurve& curve);

// Builds the coupled linear system for one implicit step: unknowns
// [x_0..x_N | y_1..y_{N-1} | kappa_0..kappa_N], all geometric weights
// frozen on the given curve. Row order: N+1 normal-velocity rows, then
// N+1 x-test rows (with the contact relaxation terms at the ends), then
// N-1 interior y-test rows.
AssembledSystem assemble(const OpenCurve& curve, const SimParams& params);

struct StepSolution {
    OpenCurve curve;
    NodalScalarField kappa;
    double residual_norm = 0.0;
    AssumptionCheck assumption;
};

// Advances the curve by one time step of size params.tau.
StepSolution solve_step(const OpenCurve& curve, const SimParams& params);

// Stopping rules for evolve; any combination may be active. The energy-rate
// rule stops once (W_m - W_{m+1}) / tau <= energy_rate_eps.
struct StopRule {
    std::optional<double> t_max;
    std::optional<long> max_steps;
    std::optional<double> energy_rate_eps = 1e-8;
};

enum class StopReason { MaxTime, MaxSteps, EnergyRate, SinkRequest };
const char* stop_reason_name(StopReason reason);

struct Snapshot {
    double t_requested = 0.0;
    double t = 0.0;
    long step = 0;
    OpenCurve curve;
};

struct EvolveResult {
    OpenCurve curve;
    NodalScalarField kappa;  // empty if no step was taken
    StopReason reason = StopReason::MaxSteps;
    long steps = 0;
    std::vector<Snapshot> snapshots;
    std::vector<std::string> warnings;
};

// Called once per record (step 0 and then every accepted step); return
// false to stop the run early.
using DiagnosticsSink = std::function<bool(const DiagnosticsRecord&)>;

// Runs the time loop, emitting one DiagnosticsRecord per step to the sink
// and capturing curve snapshots at the requested times (matched to the
// nearest step). Errors from solve_step are rethrown with the step index.
EvolveResult evolve(const OpenCurve& initial, const SimParams& params,
                    const StopRule& stop, const DiagnosticsSink& sink = {},
                    const std::vector<double>& snapshot_times = {});

}  // namespace dewet
