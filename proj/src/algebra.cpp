#include "genquat/algebra.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace genquat {

namespace {

void require_same_params(const GQuat& x, const GQuat& y) {
    if (!same_params(x.params, y.params))
        throw ParamsMismatch("operands belong to different algebras H(alpha,beta)");
}

} // namespace

bool same_params(const AlgebraParams& p, const AlgebraParams& q) noexcept {
    return std::bit_cast<std::uint64_t>(p.alpha) == std::bit_cast<std::uint64_t>(q.alpha) &&
           std::bit_cast<std::uint64_t>(p.beta) == std::bit_cast<std::uint64_t>(q.beta);
}

GQuat make(const AlgebraParams& params, double a1, double a2, double a3, double a4) {
    if (!std::isfinite(params.alpha) || !std::isfinite(params.beta))
        throw NonFiniteInput("algebra parameters must be finite");
    if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3) || !std::isfinite(a4))
        throw NonFiniteInput("coefficients must be finite");
    return GQuat{params, a1, a2, a3, a4};
}

GQuat identity(const AlgebraParams& params) noexcept { return GQuat{params, 1.0, 0.0, 0.0, 0.0}; }

GQuat zero(const AlgebraParams& params) noexcept { return GQuat{params, 0.0, 0.0, 0.0, 0.0}; }

GQuat add(const GQuat& x, const GQuat& y) {
    require_same_params(x, y);
    return GQuat{x.params, x.a1 + y.a1, x.a2 + y.a2, x.a3 + y.a3, x.a4 + y.a4};
}

GQuat scale(double c, const GQuat& x) {
    return GQuat{x.params, c * x.a1, c * x.a2, c * x.a3, c * x.a4};
}

// Expansion of the basis table, one line per output component so the eight
// sign cases stay auditable against the table in algebra.hpp.
GQuat mul(const GQuat& x, const GQuat& y) {
    require_same_params(x, y);
    const double al = x.params.alpha;
    const double be = x.params.beta;
    return GQuat{
        x.params,
        x.a1 * y.a1 - al * x.a2 * y.a2 - be * x.a3 * y.a3 - al * be * x.a4 * y.a4,
        x.a1 * y.a2 + x.a2 * y.a1 + be * x.a3 * y.a4 - be * x.a4 * y.a3,
        x.a1 * y.a3 + x.a3 * y.a1 - al * x.a2 * y.a4 + al * x.a4 * y.a2,
        x.a1 * y.a4 + x.a4 * y.a1 + x.a2 * y.a3 - x.a3 * y.a2,
    };
}

double imaginary_form(const GQuat& x) noexcept {
    const double al = x.params.alpha;
    const double be = x.params.beta;
    return al * x.a2 * x.a2 + be * x.a3 * x.a3 + al * be * x.a4 * x.a4;
}

double norm_form(const GQuat& x) noexcept { return x.a1 * x.a1 + imaginary_form(x); }

RepMatrix rep_matrix(const GQuat& m) noexcept {
    const double al = m.params.alpha;
    const double be = m.params.beta;
    RepMatrix r;
    r.m = {{
        {m.a1, -al * m.a2, -be * m.a3, -al * be * m.a4},
        {m.a2, m.a1, -be * m.a4, be * m.a3},
        {m.a3, al * m.a4, m.a1, -al * m.a2},
        {m.a4, -m.a3, m.a2, m.a1},
    }};
    return r;
}

std::array<double, 4> mat_vec(const RepMatrix& r, const std::array<double, 4>& v) noexcept {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i)
        out[i] = r.m[i][0] * v[0] + r.m[i][1] * v[1] + r.m[i][2] * v[2] + r.m[i][3] * v[3];
    return out;
}

} // namespace genquat
