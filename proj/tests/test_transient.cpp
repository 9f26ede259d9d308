#include "igsim/transient.hpp"

#include <doctest.h>

#include <algorithm>

using namespace igsim;
using doctest::Approx;

namespace {

const DeviceParams dev{};
const CircuitParams circ{};

CspProfile constant_current(double amps) {
    CspProfile p;
    p.steps = {{amps, 20e-6}};
    p.hold_current = amps;
    return p;
}

std::size_t first_at_or_below(const std::vector<double>& ch, double threshold) {
    for (std::size_t i = 0; i < ch.size(); ++i)
        if (ch[i] <= threshold) return i;
    return ch.size();
}

}  // namespace

TEST_CASE("constant gate current reaches threshold at c_ies * v_geth / i_g") {
    SimConfig cfg;
    cfg.dt = 100e-12;
    cfg.t_max = 5e-6;
    const Waveforms w =
        simulate_edge(constant_current(0.14355), dev, circ, cfg, EdgeKind::turn_on);

    std::size_t idx = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.v_ge[i] >= dev.v_geth) {
            idx = i;
            break;
        }
    }
    REQUIRE(idx < w.size());
    CHECK(std::abs(w.time_at(idx) - 100e-9) <= cfg.dt + 1e-15);
}

TEST_CASE("plateau fall segment timing follows c_gc * dv / i_g") {
    SimConfig cfg;
    cfg.dt = 100e-12;
    cfg.t_max = 15e-6;
    const Waveforms w = simulate_edge(constant_current(0.020), dev, circ, cfg, EdgeKind::turn_on);

    const std::size_t fall_start = first_at_or_below(w.v_ce, circ.v_bus - 1e-9);
    const std::size_t half = first_at_or_below(w.v_ce, circ.v_bus / 2.0);
    REQUIRE(fall_start < half);
    const double seg1 = static_cast<double>(half - fall_start) * cfg.dt;
    CHECK(std::abs(seg1 - dev.c_gc * (circ.v_bus / 2.0) / 0.020) <= 2.0 * cfg.dt);

    const std::size_t done = first_at_or_below(w.v_ce, circ.v_ce_sat);
    REQUIRE(half < done);
    const double seg2 = static_cast<double>(done - half) * cfg.dt;
    CHECK(std::abs(seg2 - dev.c_gc_lowv * (circ.v_bus / 2.0 - circ.v_ce_sat) / 0.020) <=
          2.0 * cfg.dt);
}

TEST_CASE("zero gate current leaves the device blocked") {
    SimConfig cfg;
    cfg.dt = 1e-9;
    cfg.t_max = 2e-6;
    CspProfile idle;
    idle.steps = {{0.0, 1e-6}};
    idle.hold_current = 0.0;

    bool threw = false;
    try {
        simulate_edge(idle, dev, circ, cfg, EdgeKind::turn_on);
    } catch (const IncompleteEdgeError& e) {
        threw = true;
        const Waveforms& partial = e.partial();
        REQUIRE(partial.size() > 0);
        for (std::size_t i = 0; i < partial.size(); ++i) {
            CHECK(partial.v_ce[i] == Approx(circ.v_bus));
            CHECK(partial.v_ge[i] == Approx(0.0));
            CHECK(partial.i_c[i] == Approx(0.0));
        }
    }
    CHECK(threw);
}

TEST_CASE("turn-on charge balance and stage monotonicity") {
    SimConfig cfg;
    cfg.dt = 100e-12;
    cfg.t_max = 10e-6;
    const CspProfile p = design_csp(dev, circ, CspDesignInputs{});
    const Waveforms w = simulate_edge(p, dev, circ, cfg, EdgeKind::turn_on);
    REQUIRE(w.completed);
    w.validate(circ);

    double q_sum = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) q_sum += w.i_g[i] * w.dt;
    CHECK(q_sum == Approx(w.q_g_final - w.q_g_initial).epsilon(1e-6));

    bool clamped = false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        CHECK(w.v_ge[i] >= w.v_ge[i - 1] - 1e-12);
        CHECK(w.v_ce[i] <= w.v_ce[i - 1] + 1e-12);
        if (!clamped) CHECK(w.i_c[i] >= w.i_c[i - 1] - 1e-12);
        if (w.i_c[i] >= circ.i_load) clamped = true;
    }
}

TEST_CASE("mirrored profile returns the device to the blocked state") {
    SimConfig cfg;
    cfg.dt = 100e-12;
    cfg.t_max = 10e-6;
    const CspProfile p = design_csp(dev, circ, CspDesignInputs{});

    const Waveforms on = simulate_edge(p, dev, circ, cfg, EdgeKind::turn_on);
    const Waveforms off = simulate_edge(mirror_for_turn_off(p), dev, circ, cfg, EdgeKind::turn_off);
    REQUIRE(on.completed);
    REQUIRE(off.completed);

    CHECK(off.v_ce.back() >= 0.99 * circ.v_bus);
    CHECK(off.i_c.back() <= 0.01 * circ.i_load);
    CHECK(off.v_ge.back() <= 0.01 * dev.v_ge_max);
}

TEST_CASE("halving dt moves completion times by less than one percent") {
    const CspProfile p = design_csp(dev, circ, CspDesignInputs{});
    SimConfig coarse;
    coarse.dt = 100e-12;
    coarse.t_max = 10e-6;
    SimConfig fine = coarse;
    fine.dt = 50e-12;

    for (EdgeKind edge : {EdgeKind::turn_on, EdgeKind::turn_off}) {
        const GateDriveProfile drive =
            edge == EdgeKind::turn_on ? GateDriveProfile(p) : GateDriveProfile(mirror_for_turn_off(p));
        const double t_coarse = simulate_edge(drive, dev, circ, coarse, edge).completion_time;
        const double t_fine = simulate_edge(drive, dev, circ, fine, edge).completion_time;
        CHECK(std::abs(t_coarse - t_fine) / t_fine < 0.01);
    }
}

TEST_CASE("cats drive completes both edges") {
    SimConfig cfg;
    cfg.dt = 100e-12;
    cfg.t_max = 20e-6;
    CatsProfile cats;

    const Waveforms on = simulate_edge(cats, dev, circ, cfg, EdgeKind::turn_on);
    const Waveforms off = simulate_edge(cats, dev, circ, cfg, EdgeKind::turn_off);
    CHECK(on.completed);
    CHECK(off.completed);
    CHECK(on.v_ce.back() == Approx(circ.v_ce_sat));
    CHECK(off.v_ce.back() == Approx(circ.v_bus));

    // gate current through r_g: bounded by the largest drive level
    for (std::size_t i = 0; i < on.size(); ++i)
        CHECK(std::abs(on.i_g[i]) <= cats.v_final / cats.r_g + 1e-9);
}

TEST_CASE("sim config validation") {
    SimConfig cfg;
    cfg.dt = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.dt = 2e-9;  // above the 1 ns ceiling
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.dt = 1e-9;
    cfg.t_max = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("pwm cycle assembly") {
    // two-sample ideal edges
    Waveforms on;
    on.dt = 1e-6;
    on.completed = true;
    on.v_ce = {130.0, 2.0};
    on.v_ge = {0.0, 15.0};
    on.i_c = {0.0, 10.0};
    on.i_g = {0.0, 0.0};
    Waveforms off = on;
    off.v_ce = {2.0, 130.0};
    off.v_ge = {15.0, 0.0};
    off.i_c = {10.0, 0.0};

    const Waveforms pwm = build_pwm_cycle(on, off, 50e-6, 0.5);
    CHECK(pwm.size() == 50);
    CHECK(pwm.v_ce[0] == Approx(130.0));
    CHECK(pwm.v_ce[1] == Approx(2.0));
    CHECK(pwm.v_ce[10] == Approx(2.0));   // conducting half
    CHECK(pwm.v_ce[24] == Approx(2.0));
    CHECK(pwm.v_ce[26] == Approx(130.0));  // blocking half
    CHECK(pwm.v_ce[49] == Approx(130.0));

    // swapping the edges inverts the pulse pattern
    const Waveforms swapped = build_pwm_cycle(off, on, 50e-6, 0.5);
    CHECK(swapped.v_ce[10] == Approx(130.0));
    CHECK(swapped.v_ce[30] == Approx(2.0));

    // spec'd sample count at the reference operating point
    Waveforms on_fine = on;
    Waveforms off_fine = off;
    on_fine.dt = off_fine.dt = 100e-12;
    const Waveforms ref = build_pwm_cycle(on_fine, off_fine, 50e-6, 0.5);
    CHECK(ref.size() == 500000);
}

TEST_CASE("pwm assembly rejects oversized edges") {
    Waveforms on;
    on.dt = 1e-6;
    on.completed = true;
    on.v_ce.assign(30, 2.0);
    on.v_ge.assign(30, 15.0);
    on.i_c.assign(30, 10.0);
    on.i_g.assign(30, 0.0);
    Waveforms off = on;

    CHECK_THROWS_AS(build_pwm_cycle(on, off, 50e-6, 0.5), Error);  // 30 us into a 25 us slot

    Waveforms incomplete = on;
    incomplete.completed = false;
    incomplete.v_ce.resize(4);
    incomplete.v_ge.resize(4);
    incomplete.i_c.resize(4);
    incomplete.i_g.resize(4);
    CHECK_THROWS_AS(build_pwm_cycle(incomplete, off, 50e-6, 0.5), Error);
}
