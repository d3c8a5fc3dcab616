// SPDX-License-Identifier: Apache-2.0
#include "uhs/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "uhs/error.hpp"

namespace uhs {

namespace {

double log_model(Complexity c, double n)
{
    switch (c) {
    case Complexity::Constant:
        return 0.0;
    case Complexity::Linear:
        return std::log(n);
    case Complexity::Linearithmic:
        return std::log(n) + std::log(std::log2(n));
    case Complexity::Quadratic:
        return 2.0 * std::log(n);
    }
    return 0.0;
}

constexpr std::array kCandidates = {Complexity::Constant, Complexity::Linear, Complexity::Linearithmic,
                                    Complexity::Quadratic};

} // namespace

std::string_view complexity_name(Complexity c) noexcept
{
    switch (c) {
    case Complexity::Constant:
        return "Constant";
    case Complexity::Linear:
        return "Linear";
    case Complexity::Linearithmic:
        return "Linearithmic";
    case Complexity::Quadratic:
        return "Quadratic";
    }
    return "?";
}

GrowthClass growth_fit(std::span<const GrowthPoint> points)
{
    if (points.size() < 4)
        throw InsufficientData("growth_fit needs at least 4 points");
    double lo = points.front().n, hi = points.front().n;
    for (const auto& p : points) {
        if (!(p.n >= 4))
            throw InsufficientData("growth_fit needs every n >= 4");
        if (!(p.cost > 0))
            throw InsufficientData("growth_fit needs positive costs");
        lo = std::min(lo, p.n);
        hi = std::max(hi, p.n);
    }
    if (hi / lo < 8)
        throw InsufficientData("growth_fit needs n spanning at least three doublings");

    GrowthClass best;
    bool have_best = false;
    for (Complexity c : kCandidates) {
        double mean = 0;
        for (const auto& p : points)
            mean += std::log(p.cost) - log_model(c, p.n);
        mean /= static_cast<double>(points.size());
        double residual = 0;
        for (const auto& p : points) {
            const double r = std::log(p.cost) - log_model(c, p.n) - mean;
            residual += r * r;
        }
        // Candidates run slowest-growing first; a later one must win clearly.
        if (!have_best || residual < best.fit_residual - 1e-9 * (1.0 + best.fit_residual)) {
            best = {c, residual, std::exp(mean)};
            have_best = true;
        }
    }
    return best;
}

} // namespace uhs
