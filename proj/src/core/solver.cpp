#include "core/solver.hpp"

#include <algorithm>
#include <cmath>

#include "core/metrics.hpp"

namespace dewet {

double SimParams::young_angle() const { return std::acos(sigma); }

void SimParams::validate() const {
    if (!(std::abs(sigma) < 1.0)) {
        throw InvalidArgumentError("sigma must lie strictly inside (-1, 1)");
    }
    if (!(eta > 0.0)) {
        throw InvalidArgumentError("contact-line mobility eta must be positive");
    }
    if (!(tau > 0.0)) {
        throw InvalidArgumentError("time step tau must be positive");
    }
}

AssumptionCheck check_assumption(const OpenCurve& curve) {
    AssumptionCheck result;
    result.segments_ok = true;
    for (int k = 0; k + 1 < curve.node_count(); ++k) {
        if (curve.nodes[k] == curve.nodes[k + 1]) {
            result.segments_ok = false;
            break;
        }
    }
    if (result.segments_ok && curve.node_count() >= 3) {
        const auto normal_x = [&](int k) {
            const Vec2 h = curve.nodes[k + 1] - curve.nodes[k];
            return -h.y / norm(h);  // x component of -h^perp / |h|
        };
        const double n_first = normal_x(0);
        const double n_last = normal_x(curve.segment_count() - 1);
        result.endpoint_normals_ok = n_first * n_first + n_last * n_last > 0.0;
    }
    return result;
}

namespace {

// Row-by-row assembly. The three row families couple each node to its
// neighbours only, so every row holds at most 8 entries.
struct RowBuilder {
    AssembledSystem sys;

    explicit RowBuilder(int n) {
        sys.n = n;
        sys.row_ptr.reserve(n + 1);
        sys.row_ptr.push_back(0);
        sys.col_idx.reserve(8 * n);
        sys.values.reserve(8 * n);
        sys.rhs.reserve(n);
    }
    void entry(int col, double value) {
        sys.col_idx.push_back(col);
        sys.values.push_back(value);
    }
    void close_row(double rhs_value) {
        sys.rhs.push_back(rhs_value);
        sys.row_ptr.push_back(static_cast<int>(sys.col_idx.size()));
    }
};

}  // namespace

AssembledSystem assemble(const OpenCurve& curve, const SimParams& params) {
    params.validate();
    const AssumptionCheck check = check_assumption(curve);
    if (!check.ok()) {
        throw AssumptionViolatedError(
            check.segments_ok
                ? "first and last segments are both parallel to the substrate"
                : "curve has coincident neighbouring nodes");
    }

    const SegmentFrame frames = segment_frames(curve);
    const int n_seg = frames.segment_count();   // N
    const int dim = 3 * n_seg + 1;
    const double tau = params.tau;
    const double robin = 1.0 / (params.eta * tau);

    const auto x_col = [](int i) { return i; };
    const auto y_col = [n_seg](int i) { return n_seg + i; };        // 1 <= i <= N-1
    const auto k_col = [n_seg](int i) { return 2 * n_seg + i; };

    // Lumped weights of the segment normals around node i.
    const auto weight = [&](int i) {
        Vec2 w{0.0, 0.0};
        if (i > 0) w = w + 0.5 * frames.length[i - 1] * frames.normal[i - 1];
        if (i < n_seg) w = w + 0.5 * frames.length[i] * frames.normal[i];
        return w;
    };

    RowBuilder b(dim);

    // Normal-velocity rows: lumped ((X_new - X_old) . n) / tau against the
    // hat function of node i, plus the curvature stiffness row.
    for (int i = 0; i <= n_seg; ++i) {
        const Vec2 w = weight(i);
        b.entry(x_col(i), w.x / tau);
        if (i > 0 && i < n_seg) b.entry(y_col(i), w.y / tau);
        double diag = 0.0;
        if (i > 0) {
            const double inv = 1.0 / frames.length[i - 1];
            b.entry(k_col(i - 1), -inv);
            diag += inv;
        }
        if (i < n_seg) {
            const double inv = 1.0 / frames.length[i];
            b.entry(k_col(i + 1), -inv);
            diag += inv;
        }
        b.entry(k_col(i), diag);
        const double rhs = (w.x * curve.nodes[i].x + w.y * curve.nodes[i].y) / tau;
        b.close_row(rhs);
    }

    // x-test rows: lumped curvature coupling minus the stiffness row on x,
    // with the contact relaxation term at both ends.
    for (int i = 0; i <= n_seg; ++i) {
        const Vec2 w = weight(i);
        b.entry(k_col(i), w.x);
        double diag = 0.0;
        if (i > 0) {
            const double inv = 1.0 / frames.length[i - 1];
            b.entry(x_col(i - 1), inv);
            diag += inv;
        }
        if (i < n_seg) {
            const double inv = 1.0 / frames.length[i];
            b.entry(x_col(i + 1), inv);
            diag += inv;
        }
        double rhs = 0.0;
        if (i == 0) {
            diag += robin;
            rhs = params.sigma - robin * curve.nodes[0].x;
        } else if (i == n_seg) {
            diag += robin;
            rhs = -params.sigma - robin * curve.nodes[n_seg].x;
        }
        b.entry(x_col(i), -diag);
        b.close_row(rhs);
    }

    // Interior y-test rows; the boundary values y_0 = y_N = 0 are eliminated.
    for (int i = 1; i <= n_seg - 1; ++i) {
        const Vec2 w = weight(i);
        b.entry(k_col(i), w.y);
        double diag = 0.0;
        {
            const double inv = 1.0 / frames.length[i - 1];
            if (i - 1 >= 1) b.entry(y_col(i - 1), inv);
            diag += inv;
        }
        {
            const double inv = 1.0 / frames.length[i];
            if (i + 1 <= n_seg - 1) b.entry(y_col(i + 1), inv);
            diag += inv;
        }
        b.entry(y_col(i), -diag);
        b.close_row(0.0);
    }

    return b.sys;
}

StepSolution solve_step(const OpenCurve& curve, const SimParams& params) {
    const AssembledSystem sys = assemble(curve, params);
    const std::vector<double> u = solve_linear_system(sys, params.backend);

    StepSolution sol;
    sol.assumption = check_assumption(curve);
    sol.residual_norm = sys.residual_norm(u);
    const double tolerance = 1e-10 * (1.0 + sys.rhs_norm());
    if (!(sol.residual_norm <= tolerance)) {
        throw SolveFailedError("linear solve residual " +
                               std::to_string(sol.residual_norm) +
                               " exceeds tolerance (system near-singular)");
    }

    const int n_seg = curve.segment_count();
    sol.curve.nodes.resize(n_seg + 1);
    for (int i = 0; i <= n_seg; ++i) {
        const double y = (i == 0 || i == n_seg) ? 0.0 : u[n_seg + i];
        sol.curve.nodes[i] = {u[i], y};
    }
    sol.kappa.assign(u.begin() + 2 * n_seg, u.begin() + 3 * n_seg + 1);

    if (sol.curve.x_left() > sol.curve.x_right()) {
        throw ContactCrossingError("contact points crossed: left " +
                                   std::to_string(sol.curve.x_left()) + " > right " +
                                   std::to_string(sol.curve.x_right()));
    }
    return sol;
}

const char* stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::MaxTime: return "max_time";
        case StopReason::MaxSteps: return "max_steps";
        case StopReason::EnergyRate: return "energy_rate";
        case StopReason::SinkRequest: return "sink_request";
    }
    return "unknown";
}

namespace {

[[noreturn]] void rethrow_with_step(long step, const Error& e) {
    const std::string msg = "step " + std::to_string(step) + ": " + e.what();
    if (dynamic_cast<const AssumptionViolatedError*>(&e)) throw AssumptionViolatedError(msg);
    if (dynamic_cast<const SolveFailedError*>(&e)) throw SolveFailedError(msg);
    if (dynamic_cast<const ContactCrossingError*>(&e)) throw ContactCrossingError(msg);
    if (dynamic_cast<const ZeroSegmentError*>(&e)) throw ZeroSegmentError(msg);
    throw Error(msg);
}

}  // namespace

EvolveResult evolve(const OpenCurve& initial, const SimParams& params,
                    const StopRule& stop, const DiagnosticsSink& sink,
                    const std::vector<double>& snapshot_times) {
    params.validate();
    initial.validate();

    const double tau = params.tau;
    const double area0 = polygon_area(initial);
    const double energy0 = discrete_energy(initial, params.sigma);

    // Snapshot times snap to the nearest step index.
    std::vector<std::pair<long, double>> snap_targets;
    snap_targets.reserve(snapshot_times.size());
    for (double t : snapshot_times) {
        snap_targets.emplace_back(std::max(0L, std::lround(t / tau)), t);
    }
    std::sort(snap_targets.begin(), snap_targets.end());

    EvolveResult result;
    result.curve = initial;

    auto capture_snapshots = [&](long step, const OpenCurve& curve) {
        bool captured = false;
        for (const auto& [target, t_req] : snap_targets) {
            if (target == step) {
                result.snapshots.push_back({t_req, step * tau, step, curve});
                captured = true;
            }
        }
        if (captured && !chain_is_simple(curve.nodes, /*closed=*/true)) {
            result.warnings.push_back("curve self-intersects at t=" +
                                      std::to_string(step * tau));
        }
    };

    DiagnosticsRecord rec =
        make_record(0, 0.0, initial, params.sigma, area0, energy0, std::nullopt);
    capture_snapshots(0, initial);
    if (sink && !sink(rec)) {
        result.reason = StopReason::SinkRequest;
        return result;
    }

    double energy_prev = rec.energy;
    long m = 0;
    while (true) {
        if (stop.max_steps && m >= *stop.max_steps) {
            result.reason = StopReason::MaxSteps;
            break;
        }
        const double t_next = (m + 1) * tau;
        if (stop.t_max && t_next > *stop.t_max + 0.5 * tau) {
            result.reason = StopReason::MaxTime;
            break;
        }

        StepSolution sol;
        try {
            sol = solve_step(result.curve, params);
        } catch (const Error& e) {
            rethrow_with_step(m + 1, e);
        }
        const double cvi = stiffness_inner(sol.kappa, sol.kappa, result.curve);
        result.curve = std::move(sol.curve);
        result.kappa = std::move(sol.kappa);
        ++m;
        result.steps = m;

        rec = make_record(m, m * tau, result.curve, params.sigma, area0, energy0, cvi);
        capture_snapshots(m, result.curve);
        if (sink && !sink(rec)) {
            result.reason = StopReason::SinkRequest;
            return result;
        }
        if (stop.energy_rate_eps &&
            (energy_prev - rec.energy) / tau <= *stop.energy_rate_eps) {
            result.reason = StopReason::EnergyRate;
            break;
        }
        energy_prev = rec.energy;
    }
    return result;
}

}  // namespace dewet
