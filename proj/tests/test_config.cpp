#include <doctest.h>

#include "efk/config.hpp"
#include "efk/scenarios.hpp"

using namespace efk;

TEST_CASE("minimal config parses with defaults filled in") {
    const RunConfig cfg = parse_config(
        "[problem]\n"
        "m = 1\n"
        "L = 20\n"
        "T = 2\n"
        "u0 = gaussian 10 1\n"
        "\n"
        "[discretization]\n"
        "n = 48\n"
        "tau = 5e-4\n");
    CHECK(cfg.problem.m == 1);
    CHECK(cfg.problem.L == doctest::Approx(20.0));
    CHECK(cfg.problem.T == doctest::Approx(2.0));
    CHECK(cfg.problem.u0.kind == Profile::Kind::Gaussian);
    CHECK(cfg.n == 48);
    CHECK(cfg.scheme.tau == doctest::Approx(5e-4));
    CHECK(cfg.scheme.kind == SchemeSpec::Kind::ImexEuler);
    CHECK(cfg.out_dir == "out");
}

TEST_CASE("comments, blank lines, and section order are tolerated") {
    const RunConfig cfg = parse_config(
        "# full-line comment\n"
        "[output]\n"
        "dir = results\n"
        "svg = true\n"
        "\n"
        "[problem]\n"
        "m = 2\n"
        "gamma = 0.5\n"
        "L = 40\n"
        "u0 = poly_bump 2.0\n");
    CHECK(cfg.out_dir == "results");
    CHECK(cfg.svg);
    CHECK(cfg.problem.m == 2);
    CHECK(cfg.problem.gamma == doctest::Approx(0.5));
    CHECK(cfg.problem.u0.amplitude == doctest::Approx(2.0));
}

TEST_CASE("unknown keys are hard errors with a line number") {
    try {
        parse_config("[problem]\nm = 1\nbogus = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
}

TEST_CASE("malformed values are rejected") {
    CHECK_THROWS_AS(parse_config("[problem]\nL = not_a_number\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[problem]\nu0 = gaussian\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[problem]\nu0 = wavelet 1 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[nowhere]\nm = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just some text\n"), ConfigError);
}

TEST_CASE("invalid physics is rejected at parse time") {
    CHECK_THROWS_AS(parse_config("[problem]\nm = 2\ngamma = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[problem]\nm = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[discretization]\ntau = -1\n"), ConfigError);
}

TEST_CASE("scenario key loads registry defaults and later keys override") {
    const RunConfig cfg = parse_config(
        "scenario = efk_kink\n"
        "[discretization]\n"
        "n = 16\n");
    CHECK(cfg.scenario == "efk_kink");
    CHECK(cfg.problem.m == 2);
    CHECK(cfg.n == 16);  // override sticks

    const RunConfig reg = scenario_config("efk_kink");
    CHECK(cfg.problem.L == doctest::Approx(reg.problem.L));
    CHECK_THROWS_AS(parse_config("scenario = no_such\n"), ConfigError);
}

TEST_CASE("forcing grammar") {
    const RunConfig cfg = parse_config(
        "[problem]\n"
        "u0 = sine_mode 1\n"
        "forcing = manufactured 2.5\n");
    CHECK(cfg.problem.forcing.kind == Forcing::Kind::Manufactured);
    CHECK(cfg.problem.forcing.rate == doctest::Approx(2.5));
    CHECK(cfg.problem.forcing.reference.kind == Profile::Kind::SineMode);

    const RunConfig off = parse_config("[problem]\nforcing = zero\n");
    CHECK(off.problem.forcing.kind == Forcing::Kind::Zero);
    CHECK_THROWS_AS(parse_config("[problem]\nforcing = manufactured\n"),
                    ConfigError);
}
