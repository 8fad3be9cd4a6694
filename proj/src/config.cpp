#include "whichway/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "whichway/errors.hpp"

namespace whichway {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view text, const std::string& key) {
    const std::string s{trim(text)};
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty())
        throw ConfigError(key + ": not a number: '" + s + "'");
    return v;
}

bool parse_bool(std::string_view text, const std::string& key) {
    const std::string s{trim(text)};
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ConfigError(key + ": expected true/false: '" + s + "'");
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view piece =
            comma == std::string_view::npos
                ? text.substr(start)
                : text.substr(start, comma - start);
        parts.emplace_back(trim(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

} // namespace

double parse_length(std::string_view text) {
    const std::string s{trim(text)};
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str())
        throw ConfigError("length: not a number: '" + s + "'");
    std::string_view suffix = trim(std::string_view(end));
    if (suffix.empty() || suffix == "m") return v;
    if (suffix == "nm") return v * 1e-9;
    if (suffix == "um" || suffix == "µm") return v * 1e-6;
    if (suffix == "mm") return v * 1e-3;
    throw ConfigError("length: unknown unit suffix '" + std::string(suffix) +
                      "' in '" + s + "'");
}

void apply_config_line(RunConfig& cfg, std::string_view line) {
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("config: expected 'key = value': '" +
                          std::string(line) + "'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string value_s{value};

    auto as_length = [&] { return parse_length(value); };

    if (key == "lambda") cfg.lambda = as_length();
    else if (key == "slit_width") cfg.slit_width = as_length();
    else if (key == "slit_separation") cfg.slit_separation = as_length();
    else if (key == "source_distance") cfg.source_distance = as_length();
    else if (key == "screen_distance") cfg.screen_distance = as_length();
    else if (key == "grid_min") cfg.grid_min = as_length();
    else if (key == "grid_max") cfg.grid_max = as_length();
    else if (key == "grid_points") {
        const double v = parse_double(value, key);
        if (v < 2 || v != std::floor(v))
            throw ConfigError("grid_points: expected an integer >= 2");
        cfg.grid_points = static_cast<std::size_t>(v);
    } else if (key == "symmetric") cfg.symmetric = parse_bool(value, key);
    else if (key == "nodes_per_wavelength") {
        const double v = parse_double(value, key);
        if (v < 1 || v != std::floor(v))
            throw ConfigError("nodes_per_wavelength: expected a positive integer");
        cfg.nodes_per_wavelength = static_cast<int>(v);
    } else if (key == "scheme") {
        if (value == "gauss-legendre") cfg.scheme = QuadScheme::GaussLegendre;
        else if (value == "simpson") cfg.scheme = QuadScheme::Simpson;
        else throw ConfigError("scheme: expected gauss-legendre or simpson");
    } else if (key == "mode") {
        if (value == "fraunhofer") cfg.mode = PropagationMode::Fraunhofer;
        else if (value == "exact") cfg.mode = PropagationMode::Exact;
        else throw ConfigError("mode: expected fraunhofer or exact");
    } else if (key == "classical_only") cfg.classical_only = parse_bool(value, key);
    else if (key == "efficiency") {
        cfg.efficiencies.clear();
        for (const auto& part : split_list(value))
            cfg.efficiencies.push_back(parse_double(part, key));
    } else if (key == "window") {
        const auto parts = split_list(value);
        if (parts.size() != 2)
            throw ConfigError("window: expected 'y1,y2'");
        cfg.window_lo = parse_length(parts[0]);
        cfg.window_hi = parse_length(parts[1]);
    } else if (key == "slit_centers") {
        cfg.slit_centers.clear();
        for (const auto& part : split_list(value))
            cfg.slit_centers.push_back(parse_length(part));
    } else if (key == "convergence_tol") {
        cfg.convergence_tol = parse_double(value, key);
        if (!(cfg.convergence_tol > 0.0))
            throw ConfigError("convergence_tol: must be positive");
    } else if (key == "out") cfg.out_path = value_s;
    else throw ConfigError("config: unknown key '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        apply_config_line(cfg, view);
    }
    return cfg;
}

std::string config_echo(const RunConfig& cfg) {
    std::ostringstream out;
    auto join = [](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += fmt17(v[i]);
        }
        return s;
    };
    out << "lambda = " << fmt17(cfg.lambda) << '\n'
        << "slit_width = " << fmt17(cfg.slit_width) << '\n'
        << "slit_separation = " << fmt17(cfg.slit_separation) << '\n'
        << "source_distance = " << fmt17(cfg.source_distance) << '\n'
        << "screen_distance = " << fmt17(cfg.screen_distance) << '\n'
        << "grid_min = " << fmt17(cfg.grid_min) << '\n'
        << "grid_max = " << fmt17(cfg.grid_max) << '\n'
        << "grid_points = " << cfg.grid_points << '\n'
        << "symmetric = " << (cfg.symmetric ? "true" : "false") << '\n'
        << "nodes_per_wavelength = " << cfg.nodes_per_wavelength << '\n'
        << "scheme = "
        << (cfg.scheme == QuadScheme::GaussLegendre ? "gauss-legendre"
                                                    : "simpson")
        << '\n'
        << "mode = "
        << (cfg.mode == PropagationMode::Fraunhofer ? "fraunhofer" : "exact")
        << '\n'
        << "classical_only = " << (cfg.classical_only ? "true" : "false")
        << '\n'
        << "efficiency = " << join(cfg.efficiencies) << '\n'
        << "window = " << fmt17(cfg.window_lo) << "," << fmt17(cfg.window_hi)
        << '\n';
    if (!cfg.slit_centers.empty())
        out << "slit_centers = " << join(cfg.slit_centers) << '\n';
    out << "convergence_tol = " << fmt17(cfg.convergence_tol) << '\n';
    if (!cfg.out_path.empty()) out << "out = " << cfg.out_path << '\n';
    return out.str();
}

std::uint64_t config_hash(const RunConfig& cfg) {
    const std::string echo = config_echo(cfg);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : echo) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

SlitGeometry RunConfig::geometry() const {
    try {
        return make_geometry(source_distance, screen_distance, slit_separation,
                             slit_width, lambda);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

ScreenGrid RunConfig::grid() const {
    try {
        return make_grid(grid_min, grid_max, grid_points, symmetric);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

QuadratureSpec RunConfig::quadrature() const {
    QuadratureSpec spec{nodes_per_wavelength, scheme, mode};
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

std::vector<double> RunConfig::sorkin_centers() const {
    if (!slit_centers.empty()) return slit_centers;
    return {-slit_separation, 0.0, slit_separation};
}

} // namespace whichway
