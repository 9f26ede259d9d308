#include "igsim/experiments.hpp"

#include <doctest.h>

#include <cmath>

using namespace igsim;
using doctest::Approx;

namespace {

const DeviceParams dev{};
const CircuitParams circ{};

SimConfig fast_cfg() {
    SimConfig cfg;
    cfg.dt = 1e-9;  // coarse step keeps the unit suite quick
    cfg.t_max = 20e-6;
    return cfg;
}

}  // namespace

TEST_CASE("bisection finds the root of a decreasing map") {
    const double a = 0.12;
    auto p = [&](double i) { return a / i; };

    const double target = 4.0;
    const double x = bisect_decreasing(p, target, 0.005, 0.15);
    CHECK(x == Approx(a / target).epsilon(0.005));

    // endpoint targets return immediately
    CHECK(bisect_decreasing(p, p(0.005), 0.005, 0.15) == Approx(0.005));
    CHECK(bisect_decreasing(p, p(0.15), 0.005, 0.15) == Approx(0.15));

    // unbracketed targets report the achievable range
    try {
        bisect_decreasing(p, 1000.0, 0.005, 0.15);
        FAIL("expected a calibration error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::calibration);
        CHECK(std::string(e.what()).find("achievable range") != std::string::npos);
    }
}

TEST_CASE("singleton sweep equals a direct evaluation") {
    const CspDesignInputs base;
    const SimConfig cfg = fast_cfg();

    const auto records = sweep_i3(base, {20e-3}, dev, circ, cfg);
    REQUIRE(records.size() == 1);

    CspDesignInputs direct = base;
    direct.i_3 = 20e-3;
    const TradeoffRecord one = evaluate_csp_point(direct, dev, circ, cfg, "csp");
    CHECK(records[0].p_sw == Approx(one.p_sw));
    CHECK(records[0].fom == Approx(one.fom));
    CHECK(records[0].e_on == Approx(one.e_on));
    REQUIRE(records[0].i_3.has_value());
    CHECK(*records[0].i_3 == Approx(20e-3));
}

TEST_CASE("sweep records are ordered and losses decrease with i_3") {
    const auto records = sweep_i3(CspDesignInputs{}, {10e-3, 30e-3, 50e-3}, dev, circ, fast_cfg());
    REQUIRE(records.size() == 3);
    CHECK(records[0].p_sw > records[1].p_sw);
    CHECK(records[1].p_sw > records[2].p_sw);
    for (const auto& r : records) {
        CHECK(r.p_sw > 0.0);
        CHECK(r.fom >= 1.0 - 1e-3);
    }
}

TEST_CASE("sweep failures carry the offending i_3") {
    SimConfig cfg = fast_cfg();
    cfg.t_max = 300e-9;  // far too short for an edge to finish
    try {
        sweep_i3(CspDesignInputs{}, {10e-3}, dev, circ, cfg);
        FAIL("expected an incomplete-edge error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::incomplete_edge);
        CHECK(std::string(e.what()).find("i_3 = 10 mA") != std::string::npos);
    }
    CHECK_THROWS_AS(sweep_i3(CspDesignInputs{}, {}, dev, circ, cfg), Error);
    CHECK_THROWS_AS(sweep_i3(CspDesignInputs{}, {-1e-3}, dev, circ, cfg), Error);
}

TEST_CASE("calibration reproduces the loss target") {
    const SimConfig cfg = fast_cfg();
    const CspDesignInputs base;

    // pick a target strictly inside the achievable band
    const double p_hi = evaluate_csp_point([&] {
        CspDesignInputs in = base;
        in.i_3 = 10e-3;
        return in;
    }(), dev, circ, cfg, "csp").p_sw;
    const double p_lo = evaluate_csp_point([&] {
        CspDesignInputs in = base;
        in.i_3 = 80e-3;
        return in;
    }(), dev, circ, cfg, "csp").p_sw;
    const double target = 0.5 * (p_hi + p_lo);

    const I3Bounds bounds{10e-3, 80e-3};
    const CspDesignInputs tuned = calibrate_to_loss(target, bounds, base, dev, circ, cfg);
    const TradeoffRecord check = evaluate_csp_point(tuned, dev, circ, cfg, "csp");
    CHECK(std::abs(check.p_sw - target) / target <= 0.005);

    // unbracketed target propagates as a calibration error
    CHECK_THROWS_AS(calibrate_to_loss(100.0 * p_hi, bounds, base, dev, circ, cfg), Error);
}

TEST_CASE("repeated evaluation is deterministic") {
    const SimConfig cfg = fast_cfg();
    CspDesignInputs in;
    in.i_3 = 30e-3;
    const TradeoffRecord a = evaluate_csp_point(in, dev, circ, cfg, "csp");
    const TradeoffRecord b = evaluate_csp_point(in, dev, circ, cfg, "csp");
    CHECK(a.p_sw == b.p_sw);
    CHECK(a.fom == b.fom);
    CHECK(a.e_on == b.e_on);
    CHECK(a.e_off == b.e_off);
}

TEST_CASE("equal-loss comparison calibrates the csp toward the cats loss") {
    const SimConfig cfg = fast_cfg();
    CatsProfile cats;
    cats.r_g = 47.0;

    const ComparisonReport report = compare_at_equal_loss(
        CspDesignInputs{}, cats, std::nullopt, I3Bounds{5e-3, 200e-3}, dev, circ, cfg, 0.5);

    CHECK(report.target_loss == Approx(report.cats_record.p_sw));
    CHECK(report.loss_mismatch <= 0.02);
    CHECK(report.csp_record.drive_id == "csp");
    CHECK(report.cats_record.drive_id == "cats");
    CHECK(!report.cats_record.i_3.has_value());
    REQUIRE(report.csp_record.i_3.has_value());
    CHECK(*report.csp_record.i_3 == Approx(report.tuned_inputs.i_3));

    // spectra share one frequency grid
    REQUIRE(report.csp_spectrum.f.size() == report.cats_spectrum.f.size());
    CHECK(report.csp_spectrum.f.front() == Approx(report.cats_spectrum.f.front()));
    CHECK(report.csp_spectrum.f.back() == Approx(report.cats_spectrum.f.back()));
}
