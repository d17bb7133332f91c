/* dewet: 2D solid-state dewetting simulator.
 *
 * C interface to the simulation core: opaque handles, status-code returns,
 * and a thread-local textual error message. All functions returning
 * dewet_status write their outputs only on DEWET_OK.
 */
#ifndef DEWET_H
#define DEWET_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dewet_status {
    DEWET_OK = 0,
    DEWET_ERR_INVALID_ARGUMENT = 1,
    DEWET_ERR_INVALID_CURVE = 2,
    DEWET_ERR_ZERO_SEGMENT = 3,
    DEWET_ERR_FIELD_MISMATCH = 4,
    DEWET_ERR_ASSUMPTION_VIOLATED = 5,
    DEWET_ERR_SOLVE_FAILED = 6,
    DEWET_ERR_CONTACT_CROSSING = 7,
    DEWET_ERR_NOT_SIMPLE = 8,
    DEWET_ERR_NON_POSITIVE = 9,
    DEWET_ERR_IO = 10,
    DEWET_ERR_INTERNAL = 11
} dewet_status;

const char* dewet_status_name(dewet_status status);

/* Message describing the most recent error on this thread. */
const char* dewet_last_error_message(void);

/* ---- curves ------------------------------------------------------------ */

/* Open polygonal curve with both endpoints on the substrate line y = 0. */
typedef struct dewet_curve dewet_curve;

/* xy is [x0, y0, x1, y1, ...] with n_nodes points; the curve is validated
 * (endpoints exactly on y = 0, left to right, no collapsed segments). */
dewet_status dewet_curve_create(const double* xy, size_t n_nodes, dewet_curve** out);
void dewet_curve_free(dewet_curve* curve);

dewet_status dewet_curve_node_count(const dewet_curve* curve, size_t* out);
/* Copies 2 * node_count doubles into xy_out. */
dewet_status dewet_curve_nodes(const dewet_curve* curve, double* xy_out);

/* Snapshot files: CSV with header "x,y", 17 significant digits. */
dewet_status dewet_curve_read_csv(const char* path, dewet_curve** out);
dewet_status dewet_curve_write_csv(const dewet_curve* curve, const char* path);

dewet_status dewet_curve_area(const dewet_curve* curve, double* out);
dewet_status dewet_curve_energy(const dewet_curve* curve, double sigma, double* out);
dewet_status dewet_curve_contact_angles(const dewet_curve* curve, double* left,
                                        double* right);
dewet_status dewet_curve_mesh_ratio(const dewet_curve* curve, double* out);

/* ---- built-in shapes ---------------------------------------------------- */

typedef enum dewet_shape_kind {
    DEWET_SHAPE_RECT_6X1 = 1,      /* "shape1" */
    DEWET_SHAPE_ROUNDED_RECT = 2,  /* "shape2" */
    DEWET_SHAPE_HALF_ELLIPSE = 3,  /* "shape3"; ax, ay apply */
    DEWET_SHAPE_POLAR_FLOWER = 4   /* "shape4" */
} dewet_shape_kind;

/* n_segments >= 8; nodes are equally spaced in arclength. ax/ay are only
 * read for DEWET_SHAPE_HALF_ELLIPSE (pass 0 to get the defaults 4 and 1). */
dewet_status dewet_shape_generate(dewet_shape_kind kind, int n_segments, double ax,
                                  double ay, dewet_curve** out);

/* Circular cap meeting the substrate at contact angle theta (radians) with
 * the given enclosed area, sampled uniformly in arc angle. */
dewet_status dewet_equilibrium_arc(double theta, double area, double center_x,
                                   int n_segments, dewet_curve** out);

/* ---- time stepping ------------------------------------------------------ */

typedef struct dewet_params {
    double sigma;  /* wetting constant, |sigma| < 1 */
    double eta;    /* contact-line mobility, > 0 */
    double tau;    /* time step, > 0 */
    int use_gmres; /* 0: banded direct solve (default); 1: GMRES */
} dewet_params;

dewet_status dewet_check_assumption(const dewet_curve* curve,
                                    int* endpoint_normals_ok, int* segments_ok);

/* One implicit step. kappa_out (node_count doubles) and residual_norm are
 * optional; pass NULL to skip them. */
dewet_status dewet_solve_step(const dewet_curve* curve, const dewet_params* params,
                              dewet_curve** next, double* kappa_out,
                              double* residual_norm);

typedef struct dewet_diag_record {
    long step;
    double t;
    double area;
    double area_loss_rel;
    double energy;
    double energy_norm;
    double mesh_ratio;
    int has_curvature_variation; /* 0 at step 0 */
    double curvature_variation;
    double theta_l;
    double theta_r;
    double x_l;
    double x_r;
} dewet_diag_record;

/* Return 0 to continue the run, nonzero to stop it. */
typedef int (*dewet_step_callback)(const dewet_diag_record* record, void* user);

typedef struct dewet_evolve_options {
    double t_max;           /* ignored unless > 0 */
    long max_steps;         /* ignored unless >= 0 */
    double energy_rate_eps; /* equilibrium stop; ignored unless > 0 */
    const double* snapshot_times;
    size_t n_snapshot_times;
} dewet_evolve_options;

typedef struct dewet_result dewet_result;

/* Runs the time loop. The callback (optional) sees one record at step 0 and
 * one per accepted step. */
dewet_status dewet_evolve(const dewet_curve* initial, const dewet_params* params,
                          const dewet_evolve_options* options,
                          dewet_step_callback callback, void* user,
                          dewet_result** out);
void dewet_result_free(dewet_result* result);

dewet_status dewet_result_final_curve(const dewet_result* result, dewet_curve** out);
dewet_status dewet_result_stop_reason(const dewet_result* result, const char** name);
dewet_status dewet_result_steps(const dewet_result* result, long* out);
dewet_status dewet_result_snapshot_count(const dewet_result* result, size_t* out);
dewet_status dewet_result_snapshot(const dewet_result* result, size_t index,
                                   double* t_requested, double* t_actual,
                                   dewet_curve** out);
dewet_status dewet_result_warning_count(const dewet_result* result, size_t* out);
dewet_status dewet_result_warning(const dewet_result* result, size_t index,
                                  const char** message);

/* ---- curve metrics ------------------------------------------------------ */

/* Simple polygon, stored counterclockwise. */
typedef struct dewet_polygon dewet_polygon;

dewet_status dewet_polygon_create(const double* xy, size_t n_vertices,
                                  dewet_polygon** out);
void dewet_polygon_free(dewet_polygon* polygon);
dewet_status dewet_polygon_area(const dewet_polygon* polygon, double* out);

/* Region between the curve and the substrate as a polygon. */
dewet_status dewet_curve_close_on_substrate(const dewet_curve* curve,
                                            dewet_polygon** out);

dewet_status dewet_intersection_area(const dewet_polygon* p, const dewet_polygon* q,
                                     double* out);
/* Symmetric-difference area |P| + |Q| - 2 |P inter Q|. */
dewet_status dewet_manifold_distance(const dewet_polygon* p, const dewet_polygon* q,
                                     double* out);
dewet_status dewet_manifold_distance_curves(const dewet_curve* a, const dewet_curve* b,
                                            double* out);

/* ---- equilibrium verification and studies ------------------------------- */

typedef struct dewet_verify_report {
    double cx, cy, radius, rms; /* least-squares circle through the nodes */
    double area;
    double manifold_distance_to_cap; /* against the equal-area ideal cap */
    double theta_l, theta_r;
    double theta_err_l, theta_err_r;
    double mesh_ratio;
    double equidistribution_residual;
} dewet_verify_report;

dewet_status dewet_verify_equilibrium(const dewet_curve* curve, double theta_young,
                                      dewet_verify_report* out);

/* orders_out receives n - 1 values: log(e_i/e_{i+1}) / log(h_i/h_{i+1}). */
dewet_status dewet_convergence_orders(const double* h, const double* e, size_t n,
                                      double* orders_out);

/* ---- diagnostics series files ------------------------------------------- */

typedef struct dewet_series_writer dewet_series_writer;

/* CSV with columns step,t,A,dA_rel,W,W_norm,Psi,D,theta_l,theta_r,x_l,x_r. */
dewet_status dewet_series_writer_open(const char* path, long flush_cadence,
                                      dewet_series_writer** out);
dewet_status dewet_series_writer_append(dewet_series_writer* writer,
                                        const dewet_diag_record* record);
/* Flushes and frees the writer (also safe on NULL). */
dewet_status dewet_series_writer_close(dewet_series_writer* writer);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEWET_H */
