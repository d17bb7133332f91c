#include "core/diagnostics.hpp"

#include <cmath>
#include <sstream>

#include "core/csv.hpp"

namespace dewet {

double relative_area_loss(double area_now, double area_initial) {
    if (!(area_initial > 0.0)) {
        throw InvalidArgumentError("relative_area_loss: initial area must be positive");
    }
    return (area_now - area_initial) / area_initial;
}

DiagnosticsRecord make_record(long step, double t, const OpenCurve& curve,
                              double sigma, double area_initial, double energy_initial,
                              std::optional<double> cvi) {
    DiagnosticsRecord rec;
    rec.step = step;
    rec.t = t;
    rec.area = polygon_area(curve);
    rec.area_loss_rel = relative_area_loss(rec.area, area_initial);
    rec.energy = discrete_energy(curve, sigma);
    rec.energy_norm = rec.energy / energy_initial;
    rec.mesh_ratio = mesh_ratio(curve);
    rec.curvature_variation = cvi;
    const ContactAngles angles = contact_angles(curve);
    rec.theta_l = angles.left;
    rec.theta_r = angles.right;
    rec.x_l = curve.x_left();
    rec.x_r = curve.x_right();
    return rec;
}

const char* SeriesWriter::header() {
    return "step,t,A,dA_rel,W,W_norm,Psi,D,theta_l,theta_r,x_l,x_r";
}

SeriesWriter::SeriesWriter(const std::string& path, long flush_cadence)
    : path_(path), out_(path), flush_cadence_(std::max(1L, flush_cadence)) {
    if (!out_) {
        throw IoError("cannot open series file for writing: " + path);
    }
    out_ << header() << '\n';
    out_.flush();
}

void SeriesWriter::append(const DiagnosticsRecord& rec) {
    out_ << rec.step << ',' << format_double(rec.t) << ',' << format_double(rec.area)
         << ',' << format_double(rec.area_loss_rel) << ',' << format_double(rec.energy)
         << ',' << format_double(rec.energy_norm) << ',' << format_double(rec.mesh_ratio)
         << ',';
    if (rec.curvature_variation) out_ << format_double(*rec.curvature_variation);
    out_ << ',' << format_double(rec.theta_l) << ',' << format_double(rec.theta_r)
         << ',' << format_double(rec.x_l) << ',' << format_double(rec.x_r) << '\n';
    if (++pending_ >= flush_cadence_) flush();
    if (!out_) {
        throw IoError("write failed: " + path_);
    }
}

void SeriesWriter::flush() {
    out_.flush();
    pending_ = 0;
}

std::vector<DiagnosticsRecord> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line.rfind(SeriesWriter::header(), 0) != 0) {
        throw IoError("missing series header: " + path);
    }
    std::vector<DiagnosticsRecord> records;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (cells.size() != 12) {
            throw IoError(path + ": malformed series row '" + line + "'");
        }
        DiagnosticsRecord rec;
        rec.step = std::stol(cells[0]);
        rec.t = parse_double(cells[1]);
        rec.area = parse_double(cells[2]);
        rec.area_loss_rel = parse_double(cells[3]);
        rec.energy = parse_double(cells[4]);
        rec.energy_norm = parse_double(cells[5]);
        rec.mesh_ratio = parse_double(cells[6]);
        if (!cells[7].empty()) rec.curvature_variation = parse_double(cells[7]);
        rec.theta_l = parse_double(cells[8]);
        rec.theta_r = parse_double(cells[9]);
        rec.x_l = parse_double(cells[10]);
        rec.x_r = parse_double(cells[11]);
        records.push_back(rec);
    }
    return records;
}

std::vector<double> convergence_orders(
    const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 2) {
        throw InvalidArgumentError("convergence_orders needs at least two (h, e) entries");
    }
    for (const auto& [h, e] : errors) {
        if (!(h > 0.0)) {
            throw InvalidArgumentError("convergence_orders: mesh sizes must be positive");
        }
        if (!(e > 0.0)) {
            throw NonPositiveError("convergence_orders: errors must be positive");
        }
    }
    std::vector<double> orders;
    orders.reserve(errors.size() - 1);
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const auto& [h0, e0] = errors[i];
        const auto& [h1, e1] = errors[i + 1];
        if (!(h1 < h0)) {
            throw InvalidArgumentError("convergence_orders: h must be strictly decreasing");
        }
        orders.push_back(std::log(e0 / e1) / std::log(h0 / h1));
    }
    return orders;
}

}  // namespace dewet
