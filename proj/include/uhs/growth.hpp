// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>

namespace uhs {

enum class Complexity { Constant, Linear, Linearithmic, Quadratic };

std::string_view complexity_name(Complexity c) noexcept;

struct GrowthPoint {
    double n = 0;
    double cost = 0;
};

struct GrowthClass {
    Complexity complexity = Complexity::Constant;
    /// Sum of squared residuals of log(cost) under the winning model.
    double fit_residual = 0;
    /// Fitted leading constant c in cost ~ c * g(n).
    double coefficient = 0;
};

/// Pick the growth class that best explains the measurements.
///
/// For each model g in {1, n, n log2 n, n^2} fit log(cost) = log(c) + log(g(n))
/// by least squares (the only free parameter is log c) and keep the model with
/// the smallest residual. Near-ties go to the slower-growing class.
///
/// Needs at least 4 points, every n >= 4, every cost > 0, and max n / min n of
/// at least 8 (three doublings); otherwise throws InsufficientData.
GrowthClass growth_fit(std::span<const GrowthPoint> points);

} // namespace uhs
