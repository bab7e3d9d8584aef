#include "hydrocouple/domain.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hydrocouple;
using doctest::Approx;

namespace {

ChannelCrossSection section(double width, double n = 0.009) {
    ChannelCrossSection cs;
    cs.width = width;
    cs.bank_left = 0.5;
    cs.bank_right = 0.5;
    cs.manning_n = n;
    return cs;
}

} // namespace

TEST_CASE("wall elevation is the lower bank") {
    ChannelCrossSection cs = section(0.5);
    CHECK(wall_elevation(cs) == 0.5);
    cs.bank_left = 0.2;
    cs.bank_right = 0.9;
    CHECK(wall_elevation(cs) == 0.2);
}

TEST_CASE("tanh wall profile at x = 12") {
    WallProfile w;
    w.kind = WallProfile::Kind::TanhPair;
    w.amplitude = 0.06;
    w.base = 0.14;
    w.steepness = 3.0;
    w.x_down = 9.0;
    w.x_up = 15.5;
    w.x_split = 10.5;
    const double expected = 0.06 * std::tanh(3.0 * (12.0 - 15.5)) + 0.14;
    CHECK(w.at(12.0) == expected);
    CHECK(w.at(12.0) > 0.08);
    CHECK(w.at(12.0) < 0.0800001);
    CHECK(w.at(5.0) == Approx(-0.06 * std::tanh(3.0 * (5.0 - 9.0)) + 0.14).epsilon(1e-15));
}

TEST_CASE("wetted area and depth") {
    const ChannelCrossSection cs = section(0.5);
    CHECK(wetted_area(cs, 0.0) == 0.0);
    CHECK(wetted_area(cs, 0.504) == Approx(0.252).epsilon(1e-15));
    CHECK(wetted_area(section(1.0), 2.5) == 2.5);
    CHECK_THROWS_AS(wetted_area(cs, -0.1), DomainError);

    CHECK(depth_from_area(cs, 0.0) == 0.0);
    CHECK(depth_from_area(cs, 0.252) == Approx(0.504).epsilon(1e-15));
    CHECK(depth_from_area(section(2.0), 3.0) == 1.5);
    CHECK_THROWS_AS(depth_from_area(cs, -1e-3), DomainError);
}

TEST_CASE("top width") {
    const ChannelCrossSection cs = section(0.5);
    CHECK(top_width(cs, cs.bed_elevation - 0.1) == 0.0);
    CHECK(top_width(cs, wall_elevation(cs) + 5.0) == 0.5);
    CHECK(top_width(cs, cs.bed_elevation + 0.1) == 0.5);
}

TEST_CASE("wetted perimeter") {
    CHECK(wetted_perimeter(section(0.5), 0.0) == 0.5);
    CHECK(wetted_perimeter(section(0.5), 0.252) == Approx(1.508).epsilon(1e-14));
    CHECK(wetted_perimeter(section(1.0), 1.0) == 3.0);
}

TEST_CASE("conveyance") {
    const ChannelCrossSection cs = section(0.5);
    CHECK(conveyance(cs, 0.0) == 0.0);
    const double k = std::pow(0.252, 5.0 / 3.0) / (0.009 * std::pow(1.508, 2.0 / 3.0));
    CHECK(conveyance(cs, 0.252) == Approx(k).epsilon(1e-13));
    CHECK(conveyance(cs, 0.252) == Approx(8.4949).epsilon(1e-4));
    CHECK(conveyance(section(0.5, 0.018), 0.252) == Approx(0.5 * k).epsilon(1e-13));
}

TEST_CASE("friction slope") {
    const ChannelCrossSection cs = section(0.5);
    const double k = conveyance(cs, 0.252);
    CHECK(friction_slope(cs, 0.252, 0.0) == 0.0);
    CHECK(friction_slope(cs, 0.252, 0.1) == Approx(0.01 / (k * k)).epsilon(1e-13));
    CHECK(friction_slope(cs, 0.252, -0.1) == -friction_slope(cs, 0.252, 0.1));
    CHECK(friction_slope(section(0.5, 0.0), 0.252, 0.1) == 0.0);
    CHECK_THROWS_AS(friction_slope(cs, 0.0, 0.1), DomainError);
}

TEST_CASE("cross-section validation") {
    ChannelCrossSection cs = section(0.0);
    CHECK_THROWS_AS(cs.validate(), DomainError);
    cs = section(0.5);
    cs.bank_left = -0.1;
    CHECK_THROWS_AS(cs.validate(), DomainError);
    cs = section(0.5, -0.01);
    CHECK_THROWS_AS(cs.validate(), DomainError);
    CHECK_NOTHROW(section(0.5).validate());
}

TEST_CASE("property: area and depth round trip") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> depth(0.0, 10.0);
    std::uniform_real_distribution<double> width(0.1, 5.0);
    for (int k = 0; k < 10000; ++k) {
        const ChannelCrossSection cs = section(width(rng));
        const double h = depth(rng);
        const double back = depth_from_area(cs, wetted_area(cs, h));
        REQUIRE(std::abs(back - h) <= 1e-14 * std::max(h, 1e-300));
    }
}

TEST_CASE("property: monotone in depth") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> depth(0.0, 10.0);
    const ChannelCrossSection cs = section(0.7);
    for (int k = 0; k < 10000; ++k) {
        double a = depth(rng);
        double b = depth(rng);
        if (a > b) {
            std::swap(a, b);
        }
        const double aa = wetted_area(cs, a);
        const double ab = wetted_area(cs, b);
        REQUIRE(aa <= ab);
        REQUIRE(wetted_perimeter(cs, aa) <= wetted_perimeter(cs, ab));
        REQUIRE(conveyance(cs, aa) <= conveyance(cs, ab));
    }
}

TEST_CASE("property: friction slope is odd and quadratic in Q") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> area(0.01, 2.0);
    std::uniform_real_distribution<double> q(-3.0, 3.0);
    const ChannelCrossSection cs = section(0.5);
    for (int k = 0; k < 10000; ++k) {
        const double a = area(rng);
        const double d = q(rng);
        const double s = friction_slope(cs, a, d);
        REQUIRE(friction_slope(cs, a, -d) == -s);
        REQUIRE(friction_slope(cs, a, 2.0 * d) == Approx(4.0 * s).epsilon(1e-14));
    }
}
