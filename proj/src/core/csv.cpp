#include "core/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dewet {

std::string format_double(double v) {
    char buf[40];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, n);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw IoError("not a number: '" + s + "'");
    }
    return v;
}

void write_curve_csv(const OpenCurve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << "x,y\n";
    for (const Vec2& p : curve.nodes) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

OpenCurve read_curve_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || (line != "x,y" && line != "x,y\r")) {
        throw IoError("missing 'x,y' header: " + path);
    }
    OpenCurve curve;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw IoError(path + ":" + std::to_string(lineno) + ": expected 'x,y' row");
        }
        try {
            curve.nodes.push_back({parse_double(line.substr(0, comma)),
                                   parse_double(line.substr(comma + 1))});
        } catch (const IoError& e) {
            throw IoError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return curve;
}

}  // namespace dewet
