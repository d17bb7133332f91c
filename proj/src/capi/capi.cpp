#include "dewet/dewet.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/csv.hpp"
#include "core/curve.hpp"
#include "core/diagnostics.hpp"
#include "core/metrics.hpp"
#include "core/shapes.hpp"
#include "core/solver.hpp"
#include "core/verify.hpp"

struct dewet_curve {
    dewet::OpenCurve curve;
};

struct dewet_polygon {
    dewet::SimplePolygon polygon;
};

struct dewet_result {
    dewet::EvolveResult result;
};

struct dewet_series_writer {
    dewet::SeriesWriter writer;
};

namespace {

thread_local std::string g_last_error;

dewet_status fail(dewet_status status, const char* what) {
    g_last_error = what;
    return status;
}

template <class Fn>
dewet_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return DEWET_OK;
    } catch (const dewet::InvalidCurveError& e) {
        return fail(DEWET_ERR_INVALID_CURVE, e.what());
    } catch (const dewet::ZeroSegmentError& e) {
        return fail(DEWET_ERR_ZERO_SEGMENT, e.what());
    } catch (const dewet::FieldMismatchError& e) {
        return fail(DEWET_ERR_FIELD_MISMATCH, e.what());
    } catch (const dewet::AssumptionViolatedError& e) {
        return fail(DEWET_ERR_ASSUMPTION_VIOLATED, e.what());
    } catch (const dewet::SolveFailedError& e) {
        return fail(DEWET_ERR_SOLVE_FAILED, e.what());
    } catch (const dewet::ContactCrossingError& e) {
        return fail(DEWET_ERR_CONTACT_CROSSING, e.what());
    } catch (const dewet::NotSimpleError& e) {
        return fail(DEWET_ERR_NOT_SIMPLE, e.what());
    } catch (const dewet::NonPositiveError& e) {
        return fail(DEWET_ERR_NON_POSITIVE, e.what());
    } catch (const dewet::IoError& e) {
        return fail(DEWET_ERR_IO, e.what());
    } catch (const dewet::InvalidArgumentError& e) {
        return fail(DEWET_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(DEWET_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DEWET_ERR_INTERNAL, "unknown error");
    }
}

dewet_status require(bool ok, const char* what) {
    return ok ? DEWET_OK : fail(DEWET_ERR_INVALID_ARGUMENT, what);
}

dewet::SimParams to_params(const dewet_params& p) {
    dewet::SimParams params;
    params.sigma = p.sigma;
    params.eta = p.eta;
    params.tau = p.tau;
    params.backend =
        p.use_gmres ? dewet::LinearBackend::Gmres : dewet::LinearBackend::Direct;
    params.validate();
    return params;
}

dewet_diag_record to_c_record(const dewet::DiagnosticsRecord& rec) {
    dewet_diag_record out;
    out.step = rec.step;
    out.t = rec.t;
    out.area = rec.area;
    out.area_loss_rel = rec.area_loss_rel;
    out.energy = rec.energy;
    out.energy_norm = rec.energy_norm;
    out.mesh_ratio = rec.mesh_ratio;
    out.has_curvature_variation = rec.curvature_variation.has_value() ? 1 : 0;
    out.curvature_variation = rec.curvature_variation.value_or(0.0);
    out.theta_l = rec.theta_l;
    out.theta_r = rec.theta_r;
    out.x_l = rec.x_l;
    out.x_r = rec.x_r;
    return out;
}

dewet::DiagnosticsRecord from_c_record(const dewet_diag_record& rec) {
    dewet::DiagnosticsRecord out;
    out.step = rec.step;
    out.t = rec.t;
    out.area = rec.area;
    out.area_loss_rel = rec.area_loss_rel;
    out.energy = rec.energy;
    out.energy_norm = rec.energy_norm;
    out.mesh_ratio = rec.mesh_ratio;
    if (rec.has_curvature_variation) out.curvature_variation = rec.curvature_variation;
    out.theta_l = rec.theta_l;
    out.theta_r = rec.theta_r;
    out.x_l = rec.x_l;
    out.x_r = rec.x_r;
    return out;
}

}  // namespace

extern "C" {

const char* dewet_status_name(dewet_status status) {
    switch (status) {
        case DEWET_OK: return "ok";
        case DEWET_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case DEWET_ERR_INVALID_CURVE: return "invalid_curve";
        case DEWET_ERR_ZERO_SEGMENT: return "zero_segment";
        case DEWET_ERR_FIELD_MISMATCH: return "field_mismatch";
        case DEWET_ERR_ASSUMPTION_VIOLATED: return "assumption_violated";
        case DEWET_ERR_SOLVE_FAILED: return "solve_failed";
        case DEWET_ERR_CONTACT_CROSSING: return "contact_crossing";
        case DEWET_ERR_NOT_SIMPLE: return "not_simple";
        case DEWET_ERR_NON_POSITIVE: return "non_positive";
        case DEWET_ERR_IO: return "io_error";
        case DEWET_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* dewet_last_error_message(void) { return g_last_error.c_str(); }

dewet_status dewet_curve_create(const double* xy, size_t n_nodes, dewet_curve** out) {
    if (auto s = require(xy && out && n_nodes >= 3, "dewet_curve_create: bad arguments"))
        return s;
    return guarded([&] {
        auto handle = std::make_unique<dewet_curve>();
        handle->curve.nodes.resize(n_nodes);
        for (size_t i = 0; i < n_nodes; ++i) {
            handle->curve.nodes[i] = {xy[2 * i], xy[2 * i + 1]};
        }
        handle->curve.validate();
        *out = handle.release();
    });
}

void dewet_curve_free(dewet_curve* curve) { delete curve; }

dewet_status dewet_curve_node_count(const dewet_curve* curve, size_t* out) {
    if (auto s = require(curve && out, "dewet_curve_node_count: bad arguments")) return s;
    *out = curve->curve.nodes.size();
    return DEWET_OK;
}

dewet_status dewet_curve_nodes(const dewet_curve* curve, double* xy_out) {
    if (auto s = require(curve && xy_out, "dewet_curve_nodes: bad arguments")) return s;
    for (size_t i = 0; i < curve->curve.nodes.size(); ++i) {
        xy_out[2 * i] = curve->curve.nodes[i].x;
        xy_out[2 * i + 1] = curve->curve.nodes[i].y;
    }
    return DEWET_OK;
}

dewet_status dewet_curve_read_csv(const char* path, dewet_curve** out) {
    if (auto s = require(path && out, "dewet_curve_read_csv: bad arguments")) return s;
    return guarded([&] {
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = dewet::read_curve_csv(path);
        handle->curve.validate();
        *out = handle.release();
    });
}

dewet_status dewet_curve_write_csv(const dewet_curve* curve, const char* path) {
    if (auto s = require(curve && path, "dewet_curve_write_csv: bad arguments")) return s;
    return guarded([&] { dewet::write_curve_csv(curve->curve, path); });
}

dewet_status dewet_curve_area(const dewet_curve* curve, double* out) {
    if (auto s = require(curve && out, "dewet_curve_area: bad arguments")) return s;
    return guarded([&] { *out = dewet::polygon_area(curve->curve); });
}

dewet_status dewet_curve_energy(const dewet_curve* curve, double sigma, double* out) {
    if (auto s = require(curve && out, "dewet_curve_energy: bad arguments")) return s;
    return guarded([&] { *out = dewet::discrete_energy(curve->curve, sigma); });
}

dewet_status dewet_curve_contact_angles(const dewet_curve* curve, double* left,
                                        double* right) {
    if (auto s = require(curve && left && right, "dewet_curve_contact_angles: bad arguments"))
        return s;
    return guarded([&] {
        const dewet::ContactAngles angles = dewet::contact_angles(curve->curve);
        *left = angles.left;
        *right = angles.right;
    });
}

dewet_status dewet_curve_mesh_ratio(const dewet_curve* curve, double* out) {
    if (auto s = require(curve && out, "dewet_curve_mesh_ratio: bad arguments")) return s;
    return guarded([&] { *out = dewet::mesh_ratio(curve->curve); });
}

dewet_status dewet_shape_generate(dewet_shape_kind kind, int n_segments, double ax,
                                  double ay, dewet_curve** out) {
    if (auto s = require(out != nullptr, "dewet_shape_generate: bad arguments")) return s;
    return guarded([&] {
        dewet::ShapeSpec spec;
        switch (kind) {
            case DEWET_SHAPE_RECT_6X1: spec.kind = dewet::ShapeKind::Rect6x1; break;
            case DEWET_SHAPE_ROUNDED_RECT: spec.kind = dewet::ShapeKind::RoundedRect; break;
            case DEWET_SHAPE_HALF_ELLIPSE: spec.kind = dewet::ShapeKind::HalfEllipse; break;
            case DEWET_SHAPE_POLAR_FLOWER: spec.kind = dewet::ShapeKind::PolarFlower; break;
            default:
                throw dewet::InvalidArgumentError("unknown shape kind code " +
                                                  std::to_string(static_cast<int>(kind)));
        }
        spec.n_segments = n_segments;
        if (ax > 0.0) spec.ax = ax;
        if (ay > 0.0) spec.ay = ay;
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = dewet::generate(spec);
        *out = handle.release();
    });
}

dewet_status dewet_equilibrium_arc(double theta, double area, double center_x,
                                   int n_segments, dewet_curve** out) {
    if (auto s = require(out != nullptr, "dewet_equilibrium_arc: bad arguments")) return s;
    return guarded([&] {
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = dewet::exact_equilibrium(theta, area, center_x, n_segments);
        *out = handle.release();
    });
}

dewet_status dewet_check_assumption(const dewet_curve* curve, int* endpoint_normals_ok,
                                    int* segments_ok) {
    if (auto s = require(curve && endpoint_normals_ok && segments_ok,
                         "dewet_check_assumption: bad arguments"))
        return s;
    return guarded([&] {
        const dewet::AssumptionCheck check = dewet::check_assumption(curve->curve);
        *endpoint_normals_ok = check.endpoint_normals_ok ? 1 : 0;
        *segments_ok = check.segments_ok ? 1 : 0;
    });
}

dewet_status dewet_solve_step(const dewet_curve* curve, const dewet_params* params,
                              dewet_curve** next, double* kappa_out,
                              double* residual_norm) {
    if (auto s = require(curve && params && next, "dewet_solve_step: bad arguments"))
        return s;
    return guarded([&] {
        const dewet::StepSolution sol = dewet::solve_step(curve->curve, to_params(*params));
        if (kappa_out) {
            std::memcpy(kappa_out, sol.kappa.data(), sol.kappa.size() * sizeof(double));
        }
        if (residual_norm) *residual_norm = sol.residual_norm;
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = sol.curve;
        *next = handle.release();
    });
}

dewet_status dewet_evolve(const dewet_curve* initial, const dewet_params* params,
                          const dewet_evolve_options* options,
                          dewet_step_callback callback, void* user, dewet_result** out) {
    if (auto s = require(initial && params && out, "dewet_evolve: bad arguments")) return s;
    return guarded([&] {
        dewet::StopRule stop;
        stop.energy_rate_eps.reset();
        std::vector<double> snapshot_times;
        if (options) {
            if (options->t_max > 0.0) stop.t_max = options->t_max;
            if (options->max_steps >= 0) stop.max_steps = options->max_steps;
            if (options->energy_rate_eps > 0.0) stop.energy_rate_eps = options->energy_rate_eps;
            if (options->snapshot_times && options->n_snapshot_times > 0) {
                snapshot_times.assign(options->snapshot_times,
                                      options->snapshot_times + options->n_snapshot_times);
            }
        }
        dewet::DiagnosticsSink sink;
        if (callback) {
            sink = [callback, user](const dewet::DiagnosticsRecord& rec) {
                const dewet_diag_record c_rec = to_c_record(rec);
                return callback(&c_rec, user) == 0;
            };
        }
        auto handle = std::make_unique<dewet_result>();
        handle->result =
            dewet::evolve(initial->curve, to_params(*params), stop, sink, snapshot_times);
        *out = handle.release();
    });
}

void dewet_result_free(dewet_result* result) { delete result; }

dewet_status dewet_result_final_curve(const dewet_result* result, dewet_curve** out) {
    if (auto s = require(result && out, "dewet_result_final_curve: bad arguments")) return s;
    return guarded([&] {
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = result->result.curve;
        *out = handle.release();
    });
}

dewet_status dewet_result_stop_reason(const dewet_result* result, const char** name) {
    if (auto s = require(result && name, "dewet_result_stop_reason: bad arguments")) return s;
    *name = dewet::stop_reason_name(result->result.reason);
    return DEWET_OK;
}

dewet_status dewet_result_steps(const dewet_result* result, long* out) {
    if (auto s = require(result && out, "dewet_result_steps: bad arguments")) return s;
    *out = result->result.steps;
    return DEWET_OK;
}

dewet_status dewet_result_snapshot_count(const dewet_result* result, size_t* out) {
    if (auto s = require(result && out, "dewet_result_snapshot_count: bad arguments"))
        return s;
    *out = result->result.snapshots.size();
    return DEWET_OK;
}

dewet_status dewet_result_snapshot(const dewet_result* result, size_t index,
                                   double* t_requested, double* t_actual,
                                   dewet_curve** out) {
    if (auto s = require(result && out && index < result->result.snapshots.size(),
                         "dewet_result_snapshot: bad arguments"))
        return s;
    return guarded([&] {
        const dewet::Snapshot& snap = result->result.snapshots[index];
        if (t_requested) *t_requested = snap.t_requested;
        if (t_actual) *t_actual = snap.t;
        auto handle = std::make_unique<dewet_curve>();
        handle->curve = snap.curve;
        *out = handle.release();
    });
}

dewet_status dewet_result_warning_count(const dewet_result* result, size_t* out) {
    if (auto s = require(result && out, "dewet_result_warning_count: bad arguments"))
        return s;
    *out = result->result.warnings.size();
    return DEWET_OK;
}

dewet_status dewet_result_warning(const dewet_result* result, size_t index,
                                  const char** message) {
    if (auto s = require(result && message && index < result->result.warnings.size(),
                         "dewet_result_warning: bad arguments"))
        return s;
    *message = result->result.warnings[index].c_str();
    return DEWET_OK;
}

dewet_status dewet_polygon_create(const double* xy, size_t n_vertices,
                                  dewet_polygon** out) {
    if (auto s = require(xy && out && n_vertices >= 3, "dewet_polygon_create: bad arguments"))
        return s;
    return guarded([&] {
        std::vector<dewet::Vec2> vertices(n_vertices);
        for (size_t i = 0; i < n_vertices; ++i) {
            vertices[i] = {xy[2 * i], xy[2 * i + 1]};
        }
        auto handle = std::make_unique<dewet_polygon>();
        handle->polygon = dewet::SimplePolygon::create(std::move(vertices));
        *out = handle.release();
    });
}

void dewet_polygon_free(dewet_polygon* polygon) { delete polygon; }

dewet_status dewet_polygon_area(const dewet_polygon* polygon, double* out) {
    if (auto s = require(polygon && out, "dewet_polygon_area: bad arguments")) return s;
    *out = polygon->polygon.area();
    return DEWET_OK;
}

dewet_status dewet_curve_close_on_substrate(const dewet_curve* curve,
                                            dewet_polygon** out) {
    if (auto s = require(curve && out, "dewet_curve_close_on_substrate: bad arguments"))
        return s;
    return guarded([&] {
        auto handle = std::make_unique<dewet_polygon>();
        handle->polygon = dewet::close_on_substrate(curve->curve);
        *out = handle.release();
    });
}

dewet_status dewet_intersection_area(const dewet_polygon* p, const dewet_polygon* q,
                                     double* out) {
    if (auto s = require(p && q && out, "dewet_intersection_area: bad arguments")) return s;
    return guarded([&] { *out = dewet::intersection_area(p->polygon, q->polygon); });
}

dewet_status dewet_manifold_distance(const dewet_polygon* p, const dewet_polygon* q,
                                     double* out) {
    if (auto s = require(p && q && out, "dewet_manifold_distance: bad arguments")) return s;
    return guarded([&] { *out = dewet::manifold_distance(p->polygon, q->polygon); });
}

dewet_status dewet_manifold_distance_curves(const dewet_curve* a, const dewet_curve* b,
                                            double* out) {
    if (auto s = require(a && b && out, "dewet_manifold_distance_curves: bad arguments"))
        return s;
    return guarded([&] { *out = dewet::manifold_distance(a->curve, b->curve); });
}

dewet_status dewet_verify_equilibrium(const dewet_curve* curve, double theta_young,
                                      dewet_verify_report* out) {
    if (auto s = require(curve && out, "dewet_verify_equilibrium: bad arguments")) return s;
    return guarded([&] {
        const dewet::VerifyReport report =
            dewet::verify_equilibrium(curve->curve, theta_young);
        out->cx = report.fit.cx;
        out->cy = report.fit.cy;
        out->radius = report.fit.radius;
        out->rms = report.fit.rms;
        out->area = report.area;
        out->manifold_distance_to_cap = report.manifold_distance_to_cap;
        out->theta_l = report.theta_l;
        out->theta_r = report.theta_r;
        out->theta_err_l = report.theta_err_l;
        out->theta_err_r = report.theta_err_r;
        out->mesh_ratio = report.mesh_ratio;
        out->equidistribution_residual = report.equidistribution_residual;
    });
}

dewet_status dewet_convergence_orders(const double* h, const double* e, size_t n,
                                      double* orders_out) {
    if (auto s = require(h && e && orders_out && n >= 2,
                         "dewet_convergence_orders: bad arguments"))
        return s;
    return guarded([&] {
        std::vector<std::pair<double, double>> errors(n);
        for (size_t i = 0; i < n; ++i) errors[i] = {h[i], e[i]};
        const std::vector<double> orders = dewet::convergence_orders(errors);
        std::memcpy(orders_out, orders.data(), orders.size() * sizeof(double));
    });
}

dewet_status dewet_series_writer_open(const char* path, long flush_cadence,
                                      dewet_series_writer** out) {
    if (auto s = require(path && out, "dewet_series_writer_open: bad arguments")) return s;
    return guarded([&] {
        *out = new dewet_series_writer{dewet::SeriesWriter(path, flush_cadence)};
    });
}

dewet_status dewet_series_writer_append(dewet_series_writer* writer,
                                        const dewet_diag_record* record) {
    if (auto s = require(writer && record, "dewet_series_writer_append: bad arguments"))
        return s;
    return guarded([&] { writer->writer.append(from_c_record(*record)); });
}

dewet_status dewet_series_writer_close(dewet_series_writer* writer) {
    if (!writer) return DEWET_OK;
    return guarded([&] {
        writer->writer.flush();
        delete writer;
    });
}

}  // extern "C"
