#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "respole/contour.hpp"
#include "respole/model.hpp"

namespace respole {

using json = nlohmann::ordered_json;

// Thrown for malformed or missing configuration input (distinct from
// ValidationError so the CLI can map it to its own exit code).
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

// {"E_R":..., "Gamma":..., "r":..., "gamma":[...]}
ResonanceModel model_from_json(const json& j);
json model_to_json(const ResonanceModel& m);

// {"numer":[{"re":..,"im":..}, ...], "poles":[{"re":..,"im":..,"mult":..}]}
HardyFunction hardy_from_json(const json& j);
json hardy_to_json(const HardyFunction& f);

QuadratureSpec quadrature_from_json(const json& j);
json quadrature_to_json(const QuadratureSpec& q);

struct TGrid {
    double start = 0.0;
    double stop = 10.0;
    int count = 101;

    std::vector<double> points() const;
};

TGrid tgrid_from_json(const json& j);
// "a:b:n"
TGrid tgrid_from_string(const std::string& s);

struct ExperimentConfig {
    std::optional<ResonanceModel> model;
    std::optional<HardyFunction> psi;
    std::optional<HardyFunction> phi;
    std::optional<TGrid> t_grid;
    QuadratureSpec quadrature;
    double tol = 1e-8;
    int n_max = 12;
    int dyad_k = -1;        // -1 selects r-1
    bool normalize = false; // optional post-scaling of probability columns
    bool gnuplot = false;   // also emit a gnuplot script next to the CSV

    const ResonanceModel& require_model() const;
    const HardyFunction& require_psi() const;
    const HardyFunction& require_phi() const;
};

ExperimentConfig experiment_from_json(const json& j);
json experiment_to_json(const ExperimentConfig& c);

ExperimentConfig load_experiment_file(const std::string& path);

// FNV-1a 64-bit over raw bytes, hex string; used to stamp reports with the
// configuration they were produced from.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace respole
