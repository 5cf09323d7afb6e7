#include "doctest.h"

#include "sfent/config.hpp"
#include "sfent/error.hpp"
#include "sfent/output.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>

using namespace sfent;

namespace {

RunConfig from_text(const std::string& text)
{
    std::istringstream in(text);
    RunConfig c;
    apply_ini(c, parse_ini(in, "test.ini"));
    return c;
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::NonFinite;
}

} // namespace

TEST_CASE("a full config file")
{
    const auto c = from_text(R"(
# comment
[run]
command = sweep
workers = 3
output_dir = results   ; trailing comment

[model]
system = helium-NI
z_range = 2:10:2

[quadrature]
rel_tol = 1e-9
panel_order = 12

[curves]
figures = fig1, fig8
points_2d = 250
fig1 = 0:20:800
)");
    CHECK(c.command == Command::sweep);
    CHECK(c.workers == 3);
    CHECK(c.output_dir == "results");
    CHECK(c.system == SystemKind::helium_ni);
    REQUIRE(c.z_range);
    CHECK(c.z_range->values() == std::vector<double>{2, 4, 6, 8, 10});
    CHECK(c.quadrature.rel_tol == 1e-9);
    CHECK(c.quadrature.panel_order == 12);
    CHECK(c.quadrature.abs_tol == 1e-12);
    CHECK(c.figures == std::vector<std::string>{"fig1", "fig8"});
    CHECK(c.grid_for("fig1").points == 800);
    CHECK(c.grid_for("fig1").hi == 20.0);
    CHECK(c.grid_for("fig8").points == 250);
    CHECK(c.grid_for("fig4").points == 400);
    CHECK(c.cache_path() == std::filesystem::path("results") / "optimizer_cache.txt");
    c.validate();
}

TEST_CASE("defaults")
{
    const RunConfig c;
    CHECK(c.grid_1d.lo == 0.0);
    CHECK(c.grid_1d.hi == 10.0);
    CHECK(c.grid_1d.points == 400);
    CHECK(c.grid_2d.points == 200);
    CHECK(c.hydrogenic_z.values().size() == 30);
    CHECK(c.helium_z.values().front() == 2.0);
    CHECK(c.helium_z.values().back() == 10.0);
    CHECK(known_figures().size() == 14);
    c.validate();
}

TEST_CASE("ranges")
{
    CHECK(parse_range("1:30:1").values().size() == 30);
    CHECK(parse_range("0.25:4:0.25").values().back() == doctest::Approx(4.0));
    CHECK(parse_range("0.1:0.3:0.1").values().size() == 3);
    CHECK(parse_range("5").values() == std::vector<double>{5.0});
    CHECK(parse_range("2:2:1").values() == std::vector<double>{2.0});
    CHECK(kind_of([] { parse_range("3:1:1"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_range("1:3:0"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_range("1:3:-1"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_range("1:3"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { parse_range("a:b:c"); }) == ErrorKind::ConfigError);
}

TEST_CASE("malformed files name the line")
{
    try {
        from_text("[model]\nsystem = hydrogenic\nZ 3\n");
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigError);
        CHECK(std::string(e.what()).find("test.ini:3") != std::string::npos);
    }
    CHECK(kind_of([] { from_text("Z = 1\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[model\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[model]\nZ = 1\nZ = 2\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[model]\ncharge = 1\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[plots]\nx = 1\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[plots]\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[model]\nsystem = lithium\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[model]\nZ = 1.5x\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[run]\nworkers = 1.5\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[run]\ncommand = plot\n"); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { from_text("[curves]\nfig99 = 0:1:10\n"); }) == ErrorKind::ConfigError);
}

TEST_CASE("validation")
{
    const auto invalid = [](const std::string& text) {
        return kind_of([&] { from_text(text).validate(); }) == ErrorKind::ConfigError;
    };
    CHECK(invalid("[quadrature]\nrel_tol = 0\n"));
    CHECK(invalid("[quadrature]\npanel_order = 1\n"));
    CHECK(invalid("[run]\nworkers = 0\n"));
    CHECK(invalid("[model]\nZ = -1\n"));
    CHECK(invalid("[model]\nZ1 = 1.2\n"));
    CHECK(invalid("[model]\nz_range = 0:3:1\n"));
    CHECK(invalid("[curves]\npoints_1d = 1\n"));
    CHECK(invalid("[curves]\nrange = 5:1\n"));
    CHECK(invalid("[curves]\nfigures = fig1, fig15\n"));
    CHECK(invalid("[curves]\nhelium_z = 0.5:3:1\n"));
}

TEST_CASE("output directory from the environment")
{
    RunConfig c;
    ::setenv("SFENT_OUTPUT_DIR", "/tmp/sfent_env_dir", 1);
    apply_environment(c);
    CHECK(c.output_dir == "/tmp/sfent_env_dir");
    ::setenv("SFENT_OUTPUT_DIR", "", 1);
    RunConfig d;
    apply_environment(d);
    CHECK(d.output_dir == "sfent_out");
    ::unsetenv("SFENT_OUTPUT_DIR");
}

TEST_CASE("CSV rows")
{
    CHECK(format_number(16.481868417214) == "16.4818684172");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-14) == "1e-14");
    CHECK(csv_header() ==
          "system,Z,omega,Z1,Z2,C_N,S_F,S_B,S_F2,S_B2,S_rho,S_pi,S_Gamma,S_Pi,I_F,I_B,I_r,I_p,delta_S_F,delta_S_B,status");

    ReportRow row;
    row.system = "hydrogenic";
    row.report.model_params.Z = 2.0;
    row.report.S_F = 11.2209315773;
    row.report.S_B = 5.26;
    CHECK(csv_row(row) == "hydrogenic,2,NA,NA,NA,NA,11.2209315773,5.26,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,ok");
    row.status = "error:NonConvergent";
    CHECK(csv_row(row) == "hydrogenic,2,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,NA,error:NonConvergent");

    CurveSet bad{"figX", {"x", "y"}, {{0.0, 1.0}, {1.0, NAN}}};
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::NonFinite);
    CurveSet ragged{"figX", {"x", "y"}, {{0.0}}};
    CHECK(kind_of([&] { ragged.validate(); }) == ErrorKind::ConfigError);
}
