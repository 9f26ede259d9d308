#include "igsim/gate_drive.hpp"

#include <doctest.h>

#include <random>

using namespace igsim;
using doctest::Approx;

namespace {

CspProfile paper_design() {
    return design_csp(DeviceParams{}, CircuitParams{}, CspDesignInputs{});
}

}  // namespace

TEST_CASE("csp design reproduces the closed forms") {
    const DeviceParams dev;
    const CircuitParams circ;
    const CspDesignInputs in;
    const CspProfile p = design_csp(dev, circ, in);
    REQUIRE(p.steps.size() == 4);

    const double i1 = dev.c_ies * dev.v_geth / in.dt_s1;
    CHECK(p.steps[0].amplitude == Approx(0.14355).epsilon(1e-12));
    CHECK(p.steps[0].amplitude == Approx(i1).epsilon(1e-12));

    // dt1 = dt_s1 + (c_ies / g_m) * alpha * i_load / I1
    const double dt_s2 = (dev.c_ies / dev.g_m) * (in.alpha * circ.i_load) / i1;
    CHECK(dt_s2 > 0.0);
    CHECK(p.steps[0].duration == Approx(in.dt_s1 + dt_s2).epsilon(1e-12));
    CHECK(p.steps[0].duration == Approx(106.568e-9).epsilon(1e-4));

    CHECK(p.steps[1].amplitude == Approx(0.014355).epsilon(1e-12));
    CHECK(p.steps[1].duration ==
          Approx((in.c_eff2 / dev.g_m) * (1.0 - in.alpha) * circ.i_load / p.steps[1].amplitude)
              .epsilon(1e-12));
    CHECK(p.steps[1].duration == Approx(1.6586e-9).epsilon(1e-4));

    CHECK(p.steps[2].amplitude == Approx(in.i_3));
    CHECK(p.steps[2].duration == Approx(400e-9));

    CHECK(p.steps[3].amplitude == Approx(0.296).epsilon(1e-12));
    CHECK(p.steps[3].duration == Approx(500e-9));
    CHECK(p.hold_current == Approx(0.296).epsilon(1e-12));
}

TEST_CASE("csp design hold override") {
    CspDesignInputs in;
    in.hold_current = 0.0;
    const CspProfile p = design_csp(DeviceParams{}, CircuitParams{}, in);
    CHECK(p.hold_current == 0.0);

    in.hold_current = 0.05;
    CHECK(design_csp(DeviceParams{}, CircuitParams{}, in).hold_current == Approx(0.05));
}

TEST_CASE("csp design rejects bad inputs") {
    CspDesignInputs in;
    in.alpha = 1.5;
    CHECK_THROWS_AS(design_csp(DeviceParams{}, CircuitParams{}, in), Error);

    in = CspDesignInputs{};
    in.dt_s1 = 0.0;
    CHECK_THROWS_AS(design_csp(DeviceParams{}, CircuitParams{}, in), Error);

    in = CspDesignInputs{};
    in.i2_ratio = 1.0;
    CHECK_THROWS_AS(design_csp(DeviceParams{}, CircuitParams{}, in), Error);

    in = CspDesignInputs{};
    in.i_3 = -0.01;
    CHECK_THROWS_AS(design_csp(DeviceParams{}, CircuitParams{}, in), Error);
}

TEST_CASE("drive current lookup and boundaries") {
    const CspProfile p = paper_design();

    CHECK(drive_current(p, 0.0) == Approx(p.steps[0].amplitude));
    // an exact boundary belongs to the later step
    CHECK(drive_current(p, p.steps[0].duration) == Approx(p.steps[1].amplitude));
    CHECK(drive_current(p, p.total_duration() + 1e-6) == Approx(p.hold_current));
}

TEST_CASE("injected charge matches the numeric integral of drive_current") {
    const CspProfile p = paper_design();
    const double q_sum = p.injected_charge();

    double q_num = 0.0;
    double t0 = 0.0;
    for (const auto& s : p.steps) {
        const int slices = 64;
        const double h = s.duration / slices;
        for (int i = 0; i < slices; ++i) q_num += drive_current(p, t0 + (i + 0.5) * h) * h;
        t0 += s.duration;
    }
    CHECK(q_num == Approx(q_sum).epsilon(1e-9));
}

TEST_CASE("mirror reverses and negates") {
    CspProfile p;
    p.steps = {{1.0, 1e-9}, {2.0, 2e-9}};
    p.hold_current = 0.0;
    const CspProfile m = mirror_for_turn_off(p);
    REQUIRE(m.steps.size() == 2);
    CHECK(m.steps[0].amplitude == Approx(-2.0));
    CHECK(m.steps[0].duration == Approx(2e-9));
    CHECK(m.steps[1].amplitude == Approx(-1.0));
    CHECK(m.steps[1].duration == Approx(1e-9));

    // involution
    const CspProfile mm = mirror_for_turn_off(m);
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        CHECK(mm.steps[i].amplitude == Approx(p.steps[i].amplitude));
        CHECK(mm.steps[i].duration == Approx(p.steps[i].duration));
    }
    CHECK(mm.hold_current == Approx(p.hold_current));

    // the four-step design discharges step 4 first
    const CspProfile off = mirror_for_turn_off(paper_design());
    CHECK(off.steps[0].amplitude == Approx(-0.296).epsilon(1e-12));
    CHECK(off.steps[3].amplitude == Approx(-0.14355).epsilon(1e-12));
}

TEST_CASE("cats drive voltage sequences") {
    CatsProfile cats;  // defaults carry the reference parameter set
    cats.validate();

    CHECK(cats_drive_voltage(cats, 200e-9, EdgeKind::turn_on) == Approx(7.5));
    CHECK(cats_drive_voltage(cats, 10e-6, EdgeKind::turn_on) == Approx(15.0));
    CHECK(cats_drive_voltage(cats, 300e-9, EdgeKind::turn_off) == Approx(3.75));
    CHECK(cats_drive_voltage(cats, 100e-9, EdgeKind::turn_off) == Approx(0.0));
    CHECK(cats_drive_voltage(cats, 700e-9, EdgeKind::turn_off) == Approx(0.0));

    // turn-on voltage is non-decreasing in time
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> td(0.0, 2e-6);
    for (int i = 0; i < 200; ++i) {
        double a = td(rng);
        double b = td(rng);
        if (a > b) std::swap(a, b);
        CHECK(cats_drive_voltage(cats, a, EdgeKind::turn_on) <=
              cats_drive_voltage(cats, b, EdgeKind::turn_on) + 1e-12);
    }

    // turn-off level ordering from the reference set
    CHECK(cats.v_off <= cats.v_int0);
    CHECK(cats.v_int0 < cats.v_int);
}

TEST_CASE("cats validation") {
    CatsProfile cats;
    cats.v_int0 = 8.0;  // must stay below v_int
    CHECK_THROWS_AS(cats.validate(), Error);

    cats = CatsProfile{};
    cats.r_g = 0.0;
    CHECK_THROWS_AS(cats.validate(), Error);

    cats = CatsProfile{};
    cats.v_int = 16.0;  // above v_final
    CHECK_THROWS_AS(cats.validate(), Error);
}
