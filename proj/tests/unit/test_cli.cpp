#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cylscat/error.hpp"
#include "commands.hpp"

using namespace cylscat;
using namespace cylscat::cli;

namespace fs = std::filesystem;

namespace {

const char* kSmallIncident = R"(
[geometry]
outer = circle
outer_radius = 0.5
inner = peanut

[media]
eps0 = 1
mu0 = 1
eps1 = 2
mu1 = 2
eps2 = 3
mu2 = 3
omega = 1
theta = pi/3
phi = pi/6

[run]
mode = incident
n = 8
far_directions = 16

[fieldmap]
x_min = -1
x_max = 1
y_min = -1
y_max = 1
nx = 9
ny = 7
)";

const char* kSmallAnalytic = R"(
[geometry]
outer = circle
outer_radius = 0.5
inner = peanut

[media]
eps0 = 1
mu0 = 1
eps1 = 2
mu1 = 2
eps2 = 3
mu2 = 3
omega = 1
theta = pi/3

[run]
mode = analytic
n = 8 16

[analytic]
z1 = 0.1 0.3
z2 = -0.1 0.35
z3 = -0.3 0.55
z4 = 0.15 0.6
probe_exterior = 0.2 0.7
probe_layer = 0 -0.3
probe_core = 0.2 0
exterior_radius = 0.75
samples = 64
)";

class TempDir {
public:
    explicit TempDir(const std::string& tag)
        : path_(fs::temp_directory_path() / ("cylscat_test_" + tag)) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::size_t columns(const std::string& line) {
    return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

ScenarioConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

}  // namespace

TEST_CASE("angle parsing") {
    CHECK(parse_angle("pi/2") == std::numbers::pi / 2);
    CHECK(parse_angle("pi") == std::numbers::pi);
    CHECK(parse_angle("-pi/4") == -std::numbers::pi / 4);
    CHECK(parse_angle("2*pi/3") == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-16));
    CHECK(parse_angle("1.25") == 1.25);
    CHECK(parse_angle(" 0.5 ") == 0.5);
    CHECK_THROWS_AS(parse_angle("pi/0"), ConfigError);
    CHECK_THROWS_AS(parse_angle("half"), ConfigError);
    CHECK_THROWS_AS(parse_angle("1.0x"), ConfigError);
}

TEST_CASE("config parsing") {
    const ScenarioConfig c = parse(kSmallIncident);
    CHECK(c.outer_name == "circle");
    CHECK(c.inner_name == "peanut");
    CHECK(c.mode == Mode::Incident);
    CHECK(c.n_list == std::vector<int>{8});
    CHECK(c.far_directions == 16);
    CHECK(c.medium.theta == std::numbers::pi / 3);
    REQUIRE(c.fieldmap.has_value());
    CHECK(c.fieldmap->nx == 9);
    CHECK(!c.analytic.has_value());

    const ScenarioConfig a = parse(kSmallAnalytic);
    REQUIRE(a.analytic.has_value());
    CHECK(a.n_list == std::vector<int>{8, 16});
    CHECK(a.analytic->sources.z4 == Point(0.15, 0.6));
    CHECK(a.analytic->samples == 64);

    const std::string fourier = replace(kSmallIncident, "outer = circle\nouter_radius = 0.5",
                                        "outer = fourier\nouter_x_cos = 0 0.6\nouter_y_sin = 0 0.5");
    CHECK(parse(fourier).outer.position(0.0).x() == doctest::Approx(0.6));
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "inner = peanut", "inner = banana")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "eps1 = 2", "eps1 = two")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "eps1 = 2\n", "")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "mode = incident", "mode = both")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "n = 8", "n = 8.5")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "outer_radius = 0.5", "outer_radius = 0.1")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallIncident, "nx = 9", "nx = 0")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallAnalytic, "z3 = -0.3 0.55", "z3 = 0 0")), ConfigError);
    CHECK_THROWS_AS(parse(replace(kSmallAnalytic, "z1 = 0.1 0.3", "z1 = 0.1")), ConfigError);
    CHECK_THROWS_AS(parse("[geometry\nouter = circle"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/cylscat.ini"), ConfigError);
}

TEST_CASE("exit codes") {
    TempDir dir("exit");
    Options o;
    o.quiet = true;
    o.out_dir = dir.path().string();
    o.config_path = (dir.path() / "missing.ini").string();
    CHECK(cmd_solve(o) == 2);
    o.config_path = dir.write("bad_mu.ini", replace(kSmallIncident, "mu2 = 3", "mu2 = 2"));
    CHECK(cmd_solve(o) == 2);
    o.config_path = dir.write("evanescent.ini", replace(replace(kSmallIncident, "mu2 = 3", "mu2 = 0.05"),
                                                        "eps2 = 3", "eps2 = 0.05"));
    CHECK(cmd_solve(o) == 2);
    o.config_path = dir.write("incident.ini", kSmallIncident);
    CHECK(cmd_verify(o) == 2);
    CHECK(cmd_convergence(o) == 2);
    o.config_path = dir.write("analytic.ini", kSmallAnalytic);
    CHECK(cmd_solve(o) == 2);
    o.n = 0;
    CHECK(cmd_verify(o) == 2);
}

TEST_CASE("solve and fieldmap outputs are well formed and reproducible") {
    TempDir dir("solve");
    Options o;
    o.quiet = true;
    o.config_path = dir.write("incident.ini", kSmallIncident);
    o.out_dir = (dir.path() / "a").string();
    REQUIRE(cmd_solve(o) == 0);
    o.out_dir = (dir.path() / "b").string();
    REQUIRE(cmd_solve(o) == 0);
    REQUIRE(cmd_fieldmap(o) == 0);

    for (const char* name : {"densities.csv", "farfield.csv", "fieldmap.csv"}) {
        CAPTURE(name);
        const std::string a = slurp(dir.path() / "a" / name);
        const std::string b = slurp(dir.path() / "b" / name);
        CHECK(!a.empty());
        CHECK(a == b);
    }
    const auto dens = lines(slurp(dir.path() / "a" / "densities.csv"));
    CHECK(dens.size() == 1 + 8 * 16);
    for (const auto& l : dens) CHECK(columns(l) == 7);
    const auto ff = lines(slurp(dir.path() / "a" / "farfield.csv"));
    CHECK(ff.size() == 17);
    for (const auto& l : ff) CHECK(columns(l) == 10);
    const auto map = lines(slurp(dir.path() / "a" / "fieldmap.csv"));
    CHECK(map.size() == 1 + 9 * 7);
    for (const auto& l : map) {
        CHECK(columns(l) == 9);
        CHECK(l.find("nan") == std::string::npos);
        CHECK(l.find("inf,") == std::string::npos);
    }
}

TEST_CASE("verify and convergence outputs") {
    TempDir dir("verify");
    Options o;
    o.quiet = true;
    o.config_path = dir.write("analytic.ini", kSmallAnalytic);
    o.out_dir = dir.path().string();
    REQUIRE(cmd_verify(o) == 0);
    const auto table = lines(slurp(dir.path() / "table.csv"));
    REQUIRE(table.size() == 4);
    CHECK(columns(table[0]) == 17);
    CHECK(table[3].rfind("exact,", 0) == 0);
    const auto conv = lines(slurp(dir.path() / "convergence.csv"));
    REQUIRE(conv.size() == 3);
    CHECK(columns(conv[1]) == 9);

    o.n = 12;
    fs::remove(dir.path() / "convergence.csv");
    REQUIRE(cmd_convergence(o) == 0);
    const auto single = lines(slurp(dir.path() / "convergence.csv"));
    REQUIRE(single.size() == 2);
    CHECK(single[1].rfind("12,", 0) == 0);
}
