#include "hydrocouple/errors.hpp"
#include "hydrocouple/solver2d.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hydrocouple;
using doctest::Approx;

namespace {

constexpr double g = 9.81;

Grid2D open_block(int nx, int ny) {
    Grid2D b("b", nx, ny, 0.1, 0.1, {0.0, 0.0});
    for (auto& s : b.boundary) {
        s = BoundarySpec::open();
    }
    return b;
}

// Scalar HLL written out component by component.
State2D hll_reference(double hl, double ul, double vl, double hr, double ur, double vr) {
    const double cl = std::sqrt(g * hl);
    const double cr = std::sqrt(g * hr);
    const double sl = std::min(ul - cl, ur - cr);
    const double sr = std::max(ul + cl, ur + cr);
    const double f1l = hl * ul, f1r = hr * ur;
    const double f2l = hl * ul * ul + g * hl * hl / 2, f2r = hr * ur * ur + g * hr * hr / 2;
    const double f3l = hl * ul * vl, f3r = hr * ur * vr;
    const auto mix = [&](double fl, double fr, double ql, double qr) {
        return (sr * fl - sl * fr + sl * sr * (qr - ql)) / (sr - sl);
    };
    return {mix(f1l, f1r, hl, hr), mix(f2l, f2r, hl * ul, hr * ur), mix(f3l, f3r, hl * vl, hr * vr)};
}

} // namespace

TEST_CASE("rotation") {
    const State2D w{1.0, 2.0, 3.0};
    CHECK(rotate(w, {0.0, 1.0}) == State2D{1.0, 3.0, -2.0});
    CHECK(unrotate(rotate(w, {0.0, 1.0}), {0.0, 1.0}) == w);
    CHECK(rotate(w, {1.0, 0.0}) == w);
    CHECK(rotate(w, {-1.0, 0.0}) == State2D{1.0, -2.0, -3.0});
}

TEST_CASE("physical flux") {
    CHECK(physical_flux_x({1.0, 0.0, 0.0}) == State2D{0.0, g / 2, 0.0});
    const State2D f = physical_flux_x({2.0, 2.0, 4.0});
    CHECK(f.h == 2.0);
    CHECK(f.qx == Approx(2.0 + g * 2.0).epsilon(1e-15));
    CHECK(f.qy == 4.0);
    CHECK(physical_flux_x({}) == State2D{});
    CHECK_THROWS_AS(physical_flux_x({-1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(physical_flux_x({0.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("wave speeds") {
    const WaveSpeeds s = wave_speeds({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
    CHECK(s.left == Approx(-3.1321).epsilon(1e-4));
    CHECK(s.right == Approx(3.1321).epsilon(1e-4));
    const WaveSpeeds d = wave_speeds({1.0, 0.0, 0.0}, {});
    CHECK(d.left == -std::sqrt(g));
    CHECK(d.right == std::sqrt(g));
}

TEST_CASE("HLL branches") {
    // identical states
    const State2D w{0.7, 0.3, -0.1};
    CHECK(hll_flux(w, w) == physical_flux_x(w));
    // supercritical to the right: left flux
    const State2D fast_l{1.0, 10.0, 0.0};
    const State2D fast_r{0.8, 8.0, 1.0};
    CHECK(hll_flux(fast_l, fast_r) == physical_flux_x(fast_l));
    CHECK(hll_flux({1.0, -10.0, 0.0}, {0.8, -8.0, 1.0}) == physical_flux_x({0.8, -8.0, 1.0}));
    // subsonic star region
    const State2D f = hll_flux({2.0, 1.0, 0.4}, {1.0, -0.5, 0.2});
    const State2D ref = hll_reference(2.0, 0.5, 0.2, 1.0, -0.5, 0.2);
    CHECK(f.h == Approx(ref.h).epsilon(1e-13));
    CHECK(f.qx == Approx(ref.qx).epsilon(1e-13));
    CHECK(f.qy == Approx(ref.qy).epsilon(1e-13));
}

TEST_CASE("dam break flux into dry bed") {
    const State2D f = hll_flux({1.0, 0.0, 0.0}, {});
    const double c = std::sqrt(g);
    CHECK(f.h == Approx(c * c / (2 * c) * 1.0).epsilon(1e-14));
    CHECK(f.qx == Approx(0.5 * g / 2).epsilon(1e-14));
}

TEST_CASE("hydrostatic reconstruction") {
    const HydrostaticPair p = hydrostatic_pair({1.0, 0.5, 0.2}, 0.0, {0.3, 0.1, 0.0}, 0.5);
    CHECK(p.left.h == 0.5);
    CHECK(p.left.qx == Approx(0.25).epsilon(1e-15));
    CHECK(p.left.qy == Approx(0.1).epsilon(1e-15));
    CHECK(p.right == State2D{0.3, 0.1, 0.0});
    CHECK(p.source_left == Approx(g / 2 * (1.0 - 0.25)).epsilon(1e-15));
    CHECK(p.source_right == 0.0);
    const HydrostaticPair dry = hydrostatic_pair({0.2, 0.1, 0.0}, 0.0, {0.0, 0.0, 0.0}, 0.5);
    CHECK(dry.left == State2D{});
    CHECK(dry.source_left == Approx(g / 2 * 0.04).epsilon(1e-15));
}

TEST_CASE("balanced and plain edge contributions differ by each side's pressure") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> h(0.0, 2.0), q(-1.0, 1.0), z(0.0, 0.5), a(0.0, 6.3);
    for (int k = 0; k < 2000; ++k) {
        const State2D wl{h(rng), q(rng), q(rng)};
        const State2D wr{h(rng), q(rng), q(rng)};
        const double th = a(rng);
        const Vec2 n{std::cos(th), std::sin(th)};
        const double zl = z(rng);
        const EdgeContribution bal = balanced_edge_contribution(wl, zl, wr, 0.25, n);
        const EdgeContribution ref = edge_contribution(wl, zl, wr, 0.25, n);
        const double pl = g / 2 * wl.h * wl.h;
        const double pr = g / 2 * wr.h * wr.h;
        REQUIRE(bal.left.h == Approx(ref.left.h).epsilon(1e-12));
        REQUIRE(bal.left.qx == Approx(ref.left.qx - pl * n.x).epsilon(1e-12).scale(1.0));
        REQUIRE(bal.left.qy == Approx(ref.left.qy - pl * n.y).epsilon(1e-12).scale(1.0));
        REQUIRE(bal.right.qx == Approx(ref.right.qx + pr * n.x).epsilon(1e-12).scale(1.0));
        REQUIRE(bal.right.qy == Approx(ref.right.qy + pr * n.y).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Manning friction") {
    const State2D s = friction_source_2d({1.0, 1.0, 0.0}, 0.01, 0.1);
    CHECK(s.h == 0.0);
    CHECK(s.qx == Approx(-0.1 * g * 1e-4).epsilon(1e-14));
    CHECK(s.qy == 0.0);
    CHECK(friction_source_2d({1.0, 1.0, 0.0}, 0.0, 0.1) == State2D{});
    CHECK(friction_source_2d({1e-9, 1e-9, 0.0}, 0.01, 0.1) == State2D{});
    // clipped: never reverses the discharge
    const State2D c = friction_source_2d({1e-3, 1.0, -2.0}, 0.05, 10.0);
    CHECK(c == State2D{0.0, -1.0, 2.0});
}

TEST_CASE("lake at rest over a stepped bed with a dry island") {
    Mesh2D m;
    Grid2D b("lake", 8, 6, 0.1, 0.1, {0.0, 0.0});
    Field2D w(1);
    w[0].resize(b.cell_count());
    for (int c = 0; c < b.cell_count(); ++c) {
        b.bed[c] = 0.1 * ((b.ix(c) * 7 + b.iy(c) * 3) % 5);
        if (b.ix(c) == 4 && b.iy(c) == 3) {
            b.bed[c] = 1.3;
        }
        w[0][c].h = std::max(0.0, 1.0 - b.bed[c]);
    }
    m.blocks.push_back(b);
    Field2D cur = w;
    for (int k = 0; k < 200; ++k) {
        cur = step_2d(m, cur, 0.01, 0.01 * k);
    }
    CHECK(cur == w);
}

TEST_CASE("uniform flow through open boundaries is steady") {
    Mesh2D m;
    m.blocks.push_back(open_block(6, 4));
    Field2D w(1, std::vector<State2D>(24, State2D{0.5, 0.2, -0.1}));
    Field2D next = step_2d(m, w, 0.01, 0.0);
    for (const State2D& s : next[0]) {
        CHECK(s.h == Approx(0.5).epsilon(1e-14));
        CHECK(s.qx == Approx(0.2).epsilon(1e-14));
        CHECK(s.qy == Approx(-0.1).epsilon(1e-14));
    }
}

TEST_CASE("an overly large step is reported") {
    Mesh2D m;
    Grid2D b("b", 2, 1, 0.1, 0.1, {0.0, 0.0});
    m.blocks.push_back(b);
    Field2D w(1, {State2D{0.01, 0.0, 0.0}, State2D{1.0, 0.0, 0.0}});
    CHECK_THROWS_AS(step_2d(m, w, 10.0, 0.0), StabilityError);
}

TEST_CASE("external fluxes enter the residual with the cell's pressure removed") {
    Mesh2D m;
    Grid2D b("b", 1, 1, 1.0, 1.0, {0.0, 0.0});
    m.blocks.push_back(b);
    Field2D w(1, {State2D{0.4, 0.0, 0.0}});
    const double p = g / 2 * 0.16;
    // a still neighbour across the south wall would push exactly p outward there
    const ExternalFlux x{0, 0, 0.3, State2D{0.0, 0.0, -p}, {0.0, -1.0}};
    const Field2D r = flux_residual(m, w, 0.0, std::span<const ExternalFlux>(&x, 1));
    CHECK(r[0][0].h == 0.0);
    CHECK(r[0][0].qx == 0.0);
    CHECK(std::abs(r[0][0].qy) <= 1e-15);
}
