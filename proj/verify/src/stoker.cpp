#include "hydrocouple/verify/stoker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hydrocouple::verify {

Stoker::Stoker(double hl, double hr, double g) : h_left(hl), h_right(hr), gravity(g) {
    if (!(hr > 0.0) || !(hl > hr)) {
        throw std::invalid_argument("Stoker solution needs h_left > h_right > 0");
    }
    const double cl = std::sqrt(g * hl);
    // Rarefaction velocity minus shock velocity behind the front; decreasing in h.
    const auto mismatch = [&](double h) {
        const double u_rare = 2.0 * (cl - std::sqrt(g * h));
        const double u_shock = (h - hr) * std::sqrt(0.5 * g * (1.0 / h + 1.0 / hr));
        return u_rare - u_shock;
    };
    double lo = hr;
    double hi = hl;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hl; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mismatch(mid) > 0.0 ? lo : hi) = mid;
    }
    h_star = 0.5 * (lo + hi);
    u_star = 2.0 * (cl - std::sqrt(g * h_star));
    shock_speed = h_star * u_star / (h_star - hr);
}

double Stoker::depth(double xi) const {
    const double cl = std::sqrt(gravity * h_left);
    if (xi <= -cl) {
        return h_left;
    }
    if (xi <= u_star - std::sqrt(gravity * h_star)) {
        const double c = (2.0 * cl - xi) / 3.0;
        return c * c / gravity;
    }
    if (xi <= shock_speed) {
        return h_star;
    }
    return h_right;
}

double Stoker::velocity(double xi) const {
    const double cl = std::sqrt(gravity * h_left);
    if (xi <= -cl) {
        return 0.0;
    }
    if (xi <= u_star - std::sqrt(gravity * h_star)) {
        return 2.0 / 3.0 * (cl + xi);
    }
    if (xi <= shock_speed) {
        return u_star;
    }
    return 0.0;
}

double Stoker::mean_depth(double xa, double xb, double t, double x_dam) const {
    const double a = (xa - x_dam) / t;
    const double b = (xb - x_dam) / t;
    const double cl = std::sqrt(gravity * h_left);
    const double fan_end = u_star - std::sqrt(gravity * h_star);
    // Integral of the depth over [lo, hi] clipped to [a, b].
    const auto piece = [&](double lo, double hi, auto&& integral) {
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        return hi > lo ? integral(hi) - integral(lo) : 0.0;
    };
    const auto constant = [](double h) { return [h](double xi) { return h * xi; }; };
    const auto fan = [&](double xi) {
        const double c = 2.0 * cl - xi;
        return -c * c * c / (27.0 * gravity);
    };
    const double inf = std::numeric_limits<double>::infinity();
    const double total = piece(-inf, -cl, constant(h_left)) + piece(-cl, fan_end, fan) +
                         piece(fan_end, shock_speed, constant(h_star)) +
                         piece(shock_speed, inf, constant(h_right));
    return total / (b - a);
}

double l1_depth_error(const Stoker& exact, std::span<const double> depths, double x0, double x1,
                      double t, double x_dam, Sampling sampling) {
    const double dx = (x1 - x0) / static_cast<double>(depths.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < depths.size(); ++i) {
        const double xa = x0 + static_cast<double>(i) * dx;
        const double h = sampling == Sampling::CellAverage ? exact.mean_depth(xa, xa + dx, t, x_dam)
                                                           : exact.depth(xa + 0.5 * dx, t, x_dam);
        sum += std::abs(depths[i] - h) * dx;
    }
    return sum / (x1 - x0);
}

} // namespace hydrocouple::verify
