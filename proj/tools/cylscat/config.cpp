#include "config.hpp"

#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cylscat/error.hpp"

namespace cylscat::cli {

namespace pt = boost::property_tree;

namespace {

double parse_number(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(key + ": not a number: '" + text + "'");
    }
    if (text.find_first_not_of(" \t", used) != std::string::npos) {
        throw ConfigError(key + ": not a number: '" + text + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    std::vector<double> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_number(key, tok));
    return out;
}

class Section {
public:
    Section(const pt::ptree& root, const std::string& name) : name_(name) {
        if (auto child = root.get_child_optional(name)) tree_ = *child;
    }

    bool has(const std::string& key) const { return tree_.count(key) > 0; }

    std::string text(const std::string& key) const {
        auto v = tree_.get_optional<std::string>(key);
        if (!v) throw ConfigError("[" + name_ + "] missing key '" + key + "'");
        return *v;
    }
    std::string text(const std::string& key, const std::string& fallback) const {
        return has(key) ? text(key) : fallback;
    }
    double number(const std::string& key) const { return parse_number(qualified(key), text(key)); }
    double number(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }
    double angle(const std::string& key) const {
        try {
            return parse_angle(text(key));
        } catch (const ConfigError& e) {
            throw ConfigError(qualified(key) + ": " + e.what());
        }
    }
    int integer(const std::string& key, int fallback) const {
        if (!has(key)) return fallback;
        const double v = number(key);
        if (v != static_cast<int>(v)) throw ConfigError(qualified(key) + ": expected an integer");
        return static_cast<int>(v);
    }
    std::vector<double> list(const std::string& key) const {
        return parse_list(qualified(key), text(key));
    }
    Point point(const std::string& key) const {
        const auto v = list(key);
        if (v.size() != 2) throw ConfigError(qualified(key) + ": expected two numbers 'x y'");
        return Point(v[0], v[1]);
    }

private:
    std::string qualified(const std::string& key) const { return "[" + name_ + "] " + key; }
    std::string name_;
    pt::ptree tree_;
};

BoundaryCurve read_curve(const Section& g, const std::string& prefix, std::string& name) {
    name = g.text(prefix);
    try {
        if (name == "circle") {
            const Point c = g.has(prefix + "_center") ? g.point(prefix + "_center") : Point::Zero();
            return make_circle(g.number(prefix + "_radius"), c);
        }
        if (name == "peanut") return make_peanut();
        if (name == "kite") return make_kite();
        if (name == "apple") return make_apple();
        if (name == "fourier") {
            FourierCoefficients fc;
            auto opt = [&](const std::string& key) {
                return g.has(prefix + "_" + key) ? g.list(prefix + "_" + key) : std::vector<double>{};
            };
            fc.x_cos = opt("x_cos");
            fc.x_sin = opt("x_sin");
            fc.y_cos = opt("y_cos");
            fc.y_sin = opt("y_sin");
            return make_fourier_curve(fc);
        }
    } catch (const GeometryError& e) {
        throw ConfigError("[geometry] " + prefix + ": " + e.what());
    }
    throw ConfigError("[geometry] " + prefix + ": unknown geometry '" + name +
                      "' (expected circle, peanut, kite, apple or fourier)");
}

}  // namespace

double parse_angle(const std::string& text) {
    static const std::regex pi_form(
        R"(\s*([+-])?\s*(?:([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\s*\*\s*)?pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        const double sign = m[1].matched && m[1].str() == "-" ? -1.0 : 1.0;
        const double a = m[2].matched ? std::stod(m[2].str()) : 1.0;
        const double b = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (b == 0.0) throw ConfigError("division by zero in angle '" + text + "'");
        return sign * (std::numbers::pi * a / b);
    }
    return parse_number("angle", text);
}

ScenarioConfig parse_config(std::istream& in) {
    pt::ptree root;
    try {
        pt::read_ini(in, root);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }
    const Section geometry(root, "geometry"), media(root, "media"), run(root, "run");

    std::string outer_name, inner_name;
    BoundaryCurve outer = read_curve(geometry, "outer", outer_name);
    BoundaryCurve inner = read_curve(geometry, "inner", inner_name);
    ScenarioConfig cfg(outer_name, inner_name, outer, inner);

    MediumConfig& m = cfg.medium;
    for (int j = 0; j < 3; ++j) {
        m.eps[j] = media.number("eps" + std::to_string(j));
        m.mu[j] = media.number("mu" + std::to_string(j));
    }
    m.omega = media.number("omega");
    m.theta = media.angle("theta");
    m.phi = media.has("phi") ? media.angle("phi") : 0.0;

    const std::string mode = run.text("mode", "incident");
    if (mode == "incident") {
        cfg.mode = Mode::Incident;
    } else if (mode == "analytic") {
        cfg.mode = Mode::Analytic;
    } else {
        throw ConfigError("[run] mode must be 'incident' or 'analytic', got '" + mode + "'");
    }
    if (run.has("n")) {
        cfg.n_list.clear();
        for (double v : run.list("n")) {
            if (v != static_cast<int>(v) || v < 1) throw ConfigError("[run] n: positive integers expected");
            cfg.n_list.push_back(static_cast<int>(v));
        }
        if (cfg.n_list.empty()) throw ConfigError("[run] n: empty list");
    }
    cfg.far_directions = run.integer("far_directions", 64);
    if (cfg.far_directions < 1) throw ConfigError("[run] far_directions must be positive");

    Scatterer scatterer = [&] {
        try {
            return Scatterer(cfg.outer, cfg.inner);
        } catch (const GeometryError& e) {
            throw ConfigError(std::string("[geometry] ") + e.what());
        }
    }();

    if (cfg.mode == Mode::Analytic) {
        const Section a(root, "analytic");
        AnalyticScenario s{"config",
                           scatterer,
                           m,
                           {a.point("z1"), a.point("z2"), a.point("z3"), a.point("z4")},
                           a.point("probe_exterior"),
                           a.point("probe_layer"),
                           a.point("probe_core"),
                           a.has("far_direction") ? a.point("far_direction") : Point(1.0, 0.0),
                           a.number("exterior_radius", 1.0),
                           std::nullopt,
                           a.number("core_scale", 0.5),
                           a.integer("samples", 256),
                           cfg.far_directions};
        if (a.has("layer_circle")) {
            const auto v = a.list("layer_circle");
            if (v.size() != 3) throw ConfigError("[analytic] layer_circle: expected 'x y radius'");
            s.layer_circle = SampleCircle{Point(v[0], v[1]), v[2]};
        }
        try {
            validate_scenario(s);
        } catch (const DomainError& e) {
            throw ConfigError(std::string("[analytic] ") + e.what());
        }
        cfg.analytic = std::move(s);
    }

    if (root.get_child_optional("fieldmap")) {
        const Section f(root, "fieldmap");
        FieldMapSpec spec;
        spec.x_min = f.number("x_min");
        spec.x_max = f.number("x_max");
        spec.y_min = f.number("y_min");
        spec.y_max = f.number("y_max");
        spec.nx = f.integer("nx", 100);
        spec.ny = f.integer("ny", 100);
        spec.near_distance = f.number("near_distance", -1.0);
        if (spec.nx < 1 || spec.ny < 1) throw ConfigError("[fieldmap] nx and ny must be positive");
        if (spec.x_max < spec.x_min || spec.y_max < spec.y_min) {
            throw ConfigError("[fieldmap] bounds are inverted");
        }
        cfg.fieldmap = spec;
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace cylscat::cli
