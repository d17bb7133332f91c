#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

// Raised for malformed configuration; the message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key=value configuration with CLI-flag overrides. Every run writes
// back its fully resolved form so it can be replayed exactly.
class KeyValues {
  public:
    static KeyValues from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;

    double get_double(const std::string& key) const;
    long get_long(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;

    void write(const std::string& path) const;

  private:
    std::map<std::string, std::string> values_;
};

// Resolved parameters of a simulation run.
struct RunConfig {
    std::string shape;      // shape1..shape4 or csv:<path>
    double ax = 4.0;        // shape3 semi-axes
    double ay = 1.0;
    int n_segments = 128;
    double sigma = 0.0;     // resolved from sigma= or theta_deg=
    double theta = 0.0;     // radians, arccos(sigma)
    double eta = 100.0;
    double tau = 0.0;
    bool tau_from_preset = false;  // tau = (2048/25) h^2
    std::optional<double> t_max;
    double epsilon_eq = 1e-8;      // <= 0 disables the equilibrium stop
    std::vector<double> snapshot_times;
    std::string out_dir;
    long flush_cadence = 64;
    long seed = 0;
    bool use_gmres = false;

    // Validates and fills derived fields; throws ConfigError.
    static RunConfig resolve(const KeyValues& kv);
    KeyValues to_key_values() const;
};

std::string format_value(double v);
double parse_value(const std::string& key, const std::string& text);

}  // namespace cli
