#pragma once

#include <cstdint>

#include "genquat/algebra.hpp"

namespace genquat {

struct ToleranceConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
};

// Outcome of comparing two elements. passed is true when the maximum
// absolute difference is within abs_tol or the maximum relative difference
// (scaled by the largest coefficient magnitude of either operand) is within
// rel_tol.
struct ComparisonReport {
    double max_abs_diff = 0.0;
    double max_rel_diff = 0.0;
    std::array<double, 4> per_component{};
    bool passed = false;
};

// Truncated power series sum of m^s / s! with scaling and squaring: m is
// halved until its weighted coefficient norm is <= 0.5, terms are summed
// until the running term drops below tol relative to the partial sum (at
// most 30 terms), then the result is squared back up. Ground truth for exp.
GQuat series_exp(const GQuat& m, double tol = 1e-16);

enum class Side {
    Left,  // x' = m * x
    Right, // x' = x * m
};

// Classical fixed-step RK4 on the associated 4x4 linear system over
// t in [0,1], initial state e1. Both sides converge to the same power
// series; the side toggle makes that checkable.
GQuat ode_exp(const GQuat& m, int steps = 1000, Side side = Side::Left);

// Residual of the polynomial identity
//   det(lambda I - rep(m)) == (lambda^2 - 2 m1 lambda + m1^2 - mbar)^2
// sampled at lambda in {0, +-1, +-2} scaled by (1 + |m1| + sqrt(|mbar|)).
// The determinant is evaluated by elimination with partial pivoting.
// Returns the worst relative residual over the five points.
double spectral_check(const GQuat& m);

ComparisonReport compare(const GQuat& x, const GQuat& y, const ToleranceConfig& cfg = {});

// Deterministic pseudorandom element with coefficients uniform in
// [-range, range]; equal seeds give equal elements.
GQuat random_gq(const AlgebraParams& params, double range, std::uint64_t seed);

// The generator behind random_gq, exposed so test corpora stay reproducible
// across implementations: splitmix64 over a 64-bit state, doubles built from
// the top 53 bits.
std::uint64_t splitmix64_next(std::uint64_t& state) noexcept;
double uniform_unit(std::uint64_t& state) noexcept; // [0, 1)

} // namespace genquat
