#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "core/curve.hpp"

namespace dewet {

// Per-step scalar observables of a run. curvature_variation is measured on
// the previous step's geometry and therefore undefined at step 0.
struct DiagnosticsRecord {
    long step = 0;
    double t = 0.0;
    double area = 0.0;
    double area_loss_rel = 0.0;
    double energy = 0.0;
    double energy_norm = 1.0;
    double mesh_ratio = 1.0;
    std::optional<double> curvature_variation;
    double theta_l = 0.0;
    double theta_r = 0.0;
    double x_l = 0.0;
    double x_r = 0.0;
};

double relative_area_loss(double area_now, double area_initial);

DiagnosticsRecord make_record(long step, double t, const OpenCurve& curve,
                              double sigma, double area_initial, double energy_initial,
                              std::optional<double> cvi);

// Streams records to a CSV file with the fixed column set
//   step,t,A,dA_rel,W,W_norm,Psi,D,theta_l,theta_r,x_l,x_r
// (D left empty when undefined). Values are written with 17 significant
// digits and flushed every flush_cadence rows.
class SeriesWriter {
  public:
    SeriesWriter(const std::string& path, long flush_cadence = 64);
    void append(const DiagnosticsRecord& rec);
    void flush();
    const std::string& path() const { return path_; }

    static const char* header();

  private:
    std::string path_;
    std::ofstream out_;
    long flush_cadence_;
    long pending_ = 0;
};

std::vector<DiagnosticsRecord> read_series_csv(const std::string& path);

// Observed convergence orders from a refinement sequence of (h, error)
// pairs with h strictly decreasing (factor-2 refinement in practice):
// order_i = log(e_i / e_{i+1}) / log(h_i / h_{i+1}).
std::vector<double> convergence_orders(const std::vector<std::pair<double, double>>& errors);

}  // namespace dewet
