#include "genquat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace genquat {

namespace {

// (|a1|+|a2|+|a3|+|a4|) * max(1,|alpha|,|beta|,|alpha*beta|). Submultiplicative
// for the basis table, so it bounds series terms.
double weighted_norm(const GQuat& x) noexcept {
    const double w = std::max({1.0, std::abs(x.params.alpha), std::abs(x.params.beta),
                               std::abs(x.params.alpha * x.params.beta)});
    return (std::abs(x.a1) + std::abs(x.a2) + std::abs(x.a3) + std::abs(x.a4)) * w;
}

bool finite4(const GQuat& x) noexcept {
    return std::isfinite(x.a1) && std::isfinite(x.a2) && std::isfinite(x.a3) &&
           std::isfinite(x.a4);
}

// Matrix of right multiplication: rows read off the components of x*m.
RepMatrix right_rep(const GQuat& m) noexcept {
    const double al = m.params.alpha;
    const double be = m.params.beta;
    RepMatrix r;
    r.m = {{
        {m.a1, -al * m.a2, -be * m.a3, -al * be * m.a4},
        {m.a2, m.a1, be * m.a4, -be * m.a3},
        {m.a3, -al * m.a4, m.a1, al * m.a2},
        {m.a4, m.a3, -m.a2, m.a1},
    }};
    return r;
}

using Vec4 = std::array<double, 4>;

Vec4 axpy(const Vec4& x, double h, const Vec4& y) noexcept {
    return {x[0] + h * y[0], x[1] + h * y[1], x[2] + h * y[2], x[3] + h * y[3]};
}

// Determinant by elimination with partial pivoting.
double det4(std::array<std::array<double, 4>, 4> a) noexcept {
    double det = 1.0;
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c]))
                piv = r;
        if (a[piv][c] == 0.0)
            return 0.0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int cc = c; cc < 4; ++cc)
                a[r][cc] -= f * a[c][cc];
        }
    }
    return det;
}

} // namespace

GQuat series_exp(const GQuat& m, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("series_exp: tol must be > 0");

    // Halve until the weighted norm is <= 0.5.
    int k = 0;
    for (double w = weighted_norm(m); w > 0.5 && k < 1100; w *= 0.5)
        ++k;
    const GQuat s = scale(std::ldexp(1.0, -k), m);

    GQuat term = identity(m.params);
    GQuat sum = term;
    for (int i = 1; i <= 30; ++i) {
        term = scale(1.0 / i, mul(term, s));
        sum = add(sum, term);
        if (weighted_norm(term) < tol * weighted_norm(sum))
            break;
    }
    for (int i = 0; i < k; ++i) {
        sum = mul(sum, sum);
        if (!finite4(sum))
            throw Overflow("series_exp intermediate exceeds double range");
    }
    if (!finite4(sum))
        throw Overflow("series_exp result exceeds double range");
    return sum;
}

GQuat ode_exp(const GQuat& m, int steps, Side side) {
    if (steps < 1)
        throw std::invalid_argument("ode_exp: steps must be >= 1");
    const RepMatrix a = side == Side::Left ? rep_matrix(m) : right_rep(m);
    const double h = 1.0 / steps;
    Vec4 x{1.0, 0.0, 0.0, 0.0};
    for (int n = 0; n < steps; ++n) {
        const Vec4 k1 = mat_vec(a, x);
        const Vec4 k2 = mat_vec(a, axpy(x, 0.5 * h, k1));
        const Vec4 k3 = mat_vec(a, axpy(x, 0.5 * h, k2));
        const Vec4 k4 = mat_vec(a, axpy(x, h, k3));
        for (int i = 0; i < 4; ++i)
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    const GQuat out{m.params, x[0], x[1], x[2], x[3]};
    if (!finite4(out))
        throw Overflow("ode_exp state exceeds double range");
    return out;
}

double spectral_check(const GQuat& m) {
    const RepMatrix rep = rep_matrix(m);
    const double m1 = m.a1;
    const double mb = -imaginary_form(m);
    const double sigma = 1.0 + std::abs(m1) + std::sqrt(std::abs(mb));
    double worst = 0.0;
    for (const double c : {0.0, 1.0, -1.0, 2.0, -2.0}) {
        const double lam = c * sigma;
        std::array<std::array<double, 4>, 4> a{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                a[i][j] = (i == j ? lam : 0.0) - rep.m[i][j];
        const double lhs = det4(a);
        const double quad = lam * lam - 2.0 * m1 * lam + m1 * m1 - mb;
        const double rhs = quad * quad;
        const double rel =
            std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
        worst = std::max(worst, rel);
    }
    return worst;
}

ComparisonReport compare(const GQuat& x, const GQuat& y, const ToleranceConfig& cfg) {
    if (!same_params(x.params, y.params))
        throw ParamsMismatch("compare: operands belong to different algebras");
    if (cfg.rel_tol < 0.0 || cfg.abs_tol < 0.0 || (cfg.rel_tol == 0.0 && cfg.abs_tol == 0.0))
        throw std::invalid_argument("compare: tolerances must be >= 0 and not both zero");

    ComparisonReport rep;
    const auto xc = x.coeffs();
    const auto yc = y.coeffs();
    double scale = 0.0;
    for (int i = 0; i < 4; ++i) {
        rep.per_component[i] = std::abs(xc[i] - yc[i]);
        rep.max_abs_diff = std::max(rep.max_abs_diff, rep.per_component[i]);
        scale = std::max({scale, std::abs(xc[i]), std::abs(yc[i])});
    }
    rep.max_rel_diff = scale > 0.0 ? rep.max_abs_diff / scale : 0.0;
    rep.passed = rep.max_abs_diff <= cfg.abs_tol || rep.max_rel_diff <= cfg.rel_tol;
    return rep;
}

std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform_unit(std::uint64_t& state) noexcept {
    return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

GQuat random_gq(const AlgebraParams& params, double range, std::uint64_t seed) {
    if (!(range > 0.0))
        throw std::invalid_argument("random_gq: range must be > 0");
    if (!std::isfinite(params.alpha) || !std::isfinite(params.beta))
        throw NonFiniteInput("algebra parameters must be finite");
    std::uint64_t state = seed;
    const double c1 = range * (2.0 * uniform_unit(state) - 1.0);
    const double c2 = range * (2.0 * uniform_unit(state) - 1.0);
    const double c3 = range * (2.0 * uniform_unit(state) - 1.0);
    const double c4 = range * (2.0 * uniform_unit(state) - 1.0);
    return GQuat{params, c1, c2, c3, c4};
}

} // namespace genquat
