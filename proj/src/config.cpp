#include "respole/config.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace respole {

namespace {
double number_at(const json& j, const char* key, std::optional<double> fallback = {}) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError(std::string("missing required field \"") + key + "\"");
    }
    if (!j.at(key).is_number())
        throw ConfigError(std::string("field \"") + key + "\" must be a number");
    return j.at(key).get<double>();
}
}  // namespace

json complex_to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (j.is_object()) return cplx{number_at(j, "re", 0.0), number_at(j, "im", 0.0)};
    throw ConfigError("complex value must be a number or an {\"re\",\"im\"} object");
}

ResonanceModel model_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("model must be an object");
    const double e_r = number_at(j, "E_R");
    const double gamma = number_at(j, "Gamma");
    const int r = static_cast<int>(number_at(j, "r", 1.0));
    std::vector<double> bg;
    if (j.contains("gamma")) {
        if (!j.at("gamma").is_array()) throw ConfigError("model field \"gamma\" must be an array");
        for (const auto& g : j.at("gamma")) {
            if (!g.is_number()) throw ConfigError("background phase coefficients must be numbers");
            bg.push_back(g.get<double>());
        }
    }
    // semantic invalidity propagates as ValidationError (exit code 3),
    // distinct from structural config errors (exit code 2)
    return ResonanceModel(e_r, gamma, r, std::move(bg));
}

json model_to_json(const ResonanceModel& m) {
    json j;
    j["E_R"] = m.E_R;
    j["Gamma"] = m.Gamma;
    j["r"] = m.r;
    j["gamma"] = m.gamma_coeffs;
    return j;
}

HardyFunction hardy_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("wave function must be an object");
    HardyFunction f;
    if (!j.contains("poles") || !j.at("poles").is_array())
        throw ConfigError("wave function needs a \"poles\" array");
    for (const auto& p : j.at("poles")) {
        HardyPole pole;
        pole.position = cplx{number_at(p, "re", 0.0), number_at(p, "im")};
        pole.multiplicity = static_cast<int>(number_at(p, "mult", 1.0));
        f.poles.push_back(pole);
    }
    std::vector<cplx> numer;
    if (j.contains("numer")) {
        if (!j.at("numer").is_array()) throw ConfigError("\"numer\" must be an array");
        for (const auto& c : j.at("numer")) numer.push_back(complex_from_json(c));
    } else {
        numer.push_back(cplx{1.0, 0.0});
    }
    f.numer = Poly(std::move(numer));
    return f;
}

json hardy_to_json(const HardyFunction& f) {
    json j;
    j["numer"] = json::array();
    for (const auto& c : f.numer.coeffs()) j["numer"].push_back(complex_to_json(c));
    j["poles"] = json::array();
    for (const auto& p : f.poles)
        j["poles"].push_back(json{
            {"re", p.position.real()}, {"im", p.position.imag()}, {"mult", p.multiplicity}});
    return j;
}

QuadratureSpec quadrature_from_json(const json& j) {
    QuadratureSpec q;
    if (j.is_null()) return q;
    if (!j.is_object()) throw ConfigError("quadrature must be an object");
    q.circle_radius = number_at(j, "radius", 0.0);
    q.panels = static_cast<int>(number_at(j, "panels", 32.0));
    q.e_max = number_at(j, "E_max", 0.0);
    q.tol = number_at(j, "tol", 1e-12);
    const std::string scheme = j.value("scheme", "adaptive");
    if (scheme == "adaptive")
        q.scheme = QuadScheme::Adaptive;
    else if (scheme == "fixed-trapezoid")
        q.scheme = QuadScheme::FixedTrapezoid;
    else
        throw ConfigError("quadrature scheme must be \"adaptive\" or \"fixed-trapezoid\"");
    return q;
}

json quadrature_to_json(const QuadratureSpec& q) {
    json j;
    j["radius"] = q.circle_radius;
    j["panels"] = q.panels;
    j["E_max"] = q.e_max;
    j["tol"] = q.tol;
    j["scheme"] = q.scheme == QuadScheme::Adaptive ? "adaptive" : "fixed-trapezoid";
    return j;
}

std::vector<double> TGrid::points() const {
    if (count < 1) throw ValidationError("t-grid count must be >= 1");
    std::vector<double> t(static_cast<std::size_t>(count));
    if (count == 1) {
        t[0] = start;
        return t;
    }
    const double h = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = start + h * i;
    return t;
}

TGrid tgrid_from_json(const json& j) {
    TGrid g;
    g.start = number_at(j, "start", 0.0);
    g.stop = number_at(j, "stop");
    g.count = static_cast<int>(number_at(j, "count", 101.0));
    if (g.count < 1) throw ValidationError("t-grid count must be >= 1");
    if (g.start < 0.0) throw ValidationError("t-grid start must be >= 0 (semigroup domain)");
    if (g.stop < g.start) throw ValidationError("t-grid stop must be >= start");
    return g;
}

TGrid tgrid_from_string(const std::string& s) {
    TGrid g;
    std::istringstream is(s);
    char c1 = 0, c2 = 0;
    if (!(is >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ':' || c2 != ':')
        throw ConfigError("t-grid must have the form start:stop:count");
    if (g.count < 1) throw ValidationError("t-grid count must be >= 1");
    if (g.start < 0.0) throw ValidationError("t-grid start must be >= 0 (semigroup domain)");
    if (g.stop < g.start) throw ValidationError("t-grid stop must be >= start");
    return g;
}

const ResonanceModel& ExperimentConfig::require_model() const {
    if (!model) throw ConfigError("this subcommand needs a \"model\" entry in the config");
    return *model;
}

const HardyFunction& ExperimentConfig::require_psi() const {
    if (!psi) throw ConfigError("this subcommand needs a \"psi\" entry in the config");
    return *psi;
}

const HardyFunction& ExperimentConfig::require_phi() const {
    if (!phi) throw ConfigError("this subcommand needs a \"phi\" entry in the config");
    return *phi;
}

ExperimentConfig experiment_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    ExperimentConfig c;
    if (j.contains("model")) c.model = model_from_json(j.at("model"));
    if (j.contains("psi")) c.psi = hardy_from_json(j.at("psi"));
    if (j.contains("phi")) c.phi = hardy_from_json(j.at("phi"));
    if (j.contains("t_grid")) c.t_grid = tgrid_from_json(j.at("t_grid"));
    if (j.contains("quadrature")) c.quadrature = quadrature_from_json(j.at("quadrature"));
    c.tol = number_at(j, "tol", 1e-8);
    c.n_max = static_cast<int>(number_at(j, "n_max", 12.0));
    c.dyad_k = static_cast<int>(number_at(j, "dyad_k", -1.0));
    c.normalize = j.value("normalize", false);
    c.gnuplot = j.value("gnuplot", false);
    return c;
}

json experiment_to_json(const ExperimentConfig& c) {
    json j;
    if (c.model) j["model"] = model_to_json(*c.model);
    if (c.psi) j["psi"] = hardy_to_json(*c.psi);
    if (c.phi) j["phi"] = hardy_to_json(*c.phi);
    if (c.t_grid)
        j["t_grid"] = json{{"start", c.t_grid->start}, {"stop", c.t_grid->stop},
                           {"count", c.t_grid->count}};
    j["quadrature"] = quadrature_to_json(c.quadrature);
    j["tol"] = c.tol;
    j["n_max"] = c.n_max;
    j["dyad_k"] = c.dyad_k;
    j["normalize"] = c.normalize;
    j["gnuplot"] = c.gnuplot;
    return j;
}

ExperimentConfig load_experiment_file(const std::string& path) {
    const std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("cannot parse config: ") + e.what());
    }
    return experiment_from_json(j);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << contents;
}

}  // namespace respole
