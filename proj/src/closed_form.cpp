#include "genquat/closed_form.hpp"

#include <cmath>

namespace genquat {

namespace {

// Degenerate classification: |form| <= kDegenerateRel * (1 + scalar^2).
constexpr double kDegenerateRel = 1e-12;

// Below this |mbar| the closed-form factors are evaluated by their even
// series in mbar, which is exact to double precision in that range and
// avoids the 0/0 at the branch point.
constexpr double kSeriesWindow = 1e-8;

// Above this m1 or sqrt(mbar), e^{m1} and cosh/sinh are folded into single
// exponentials e^{m1 +- u} so the evaluation survives while the combined
// exponent is still representable.
constexpr double kCombineLimit = 300.0;

// Shared by both branches: cosh(sqrt(mb)) = cos(sqrt(-mb)) = f0 and the
// matching sinh/sin ratio, as even series in mb.
void factors_series(double mb, double& f0, double& f1) noexcept {
    f0 = 1.0 + mb / 2.0 + mb * mb / 24.0;
    f1 = 1.0 + mb / 6.0 + mb * mb / 120.0;
}

bool finite4(const GQuat& x) noexcept {
    return std::isfinite(x.a1) && std::isfinite(x.a2) && std::isfinite(x.a3) &&
           std::isfinite(x.a4);
}

} // namespace

const char* branch_label(Branch b) noexcept {
    switch (b) {
    case Branch::Trigonometric:
        return "trig";
    case Branch::Hyperbolic:
        return "hyp";
    case Branch::Degenerate:
        return "degen";
    }
    return "?";
}

Branch branch_of(double form, double threshold) noexcept {
    if (form > threshold)
        return Branch::Trigonometric;
    if (form < -threshold)
        return Branch::Hyperbolic;
    return Branch::Degenerate;
}

double mbar(const GQuat& m) noexcept { return -imaginary_form(m); }

ExpFactors exp_factors(const GQuat& m) {
    const double mb = mbar(m);
    const Branch branch = branch_of(-mb, kDegenerateRel * (1.0 + m.a1 * m.a1));
    double f0;
    double f1;
    if (std::abs(mb) < kSeriesWindow) {
        factors_series(mb, f0, f1);
    } else if (mb > 0.0) {
        const double u = std::sqrt(mb);
        f0 = std::cosh(u);
        f1 = std::sinh(u) / u;
    } else {
        const double u = std::sqrt(-mb);
        f0 = std::cos(u);
        f1 = std::sin(u) / u;
    }
    return ExpFactors{std::exp(m.a1), f0, f1, branch};
}

GQuat exp(const GQuat& m) {
    const double mb = mbar(m);
    double g0; // e^{m1} * f0
    double g1; // e^{m1} * f1
    if (mb > kSeriesWindow && (m.a1 > kCombineLimit || mb > kCombineLimit * kCombineLimit)) {
        const double u = std::sqrt(mb);
        const double ep = std::exp(m.a1 + u);
        const double en = std::exp(m.a1 - u);
        g0 = 0.5 * (ep + en);
        g1 = 0.5 * (ep - en) / u;
    } else {
        const ExpFactors f = exp_factors(m);
        g0 = f.scalar_factor * f.f0;
        g1 = f.scalar_factor * f.f1;
    }
    const GQuat r{m.params, g0, g1 * m.a2, g1 * m.a3, g1 * m.a4};
    if (!finite4(r))
        throw Overflow("exp result exceeds double range");
    return r;
}

GQuat quat_exp_reference(const GQuat& m) {
    if (m.params.alpha != 1.0 || m.params.beta != 1.0)
        throw ParamsMismatch("quat_exp_reference requires H(1,1)");
    const double u = std::sqrt(m.a2 * m.a2 + m.a3 * m.a3 + m.a4 * m.a4);
    const double s = std::exp(m.a1);
    const double f0 = std::cos(u);
    const double f1 = u > 0.0 ? std::sin(u) / u : 1.0;
    const GQuat r{m.params, s * f0, s * f1 * m.a2, s * f1 * m.a3, s * f1 * m.a4};
    if (!finite4(r))
        throw Overflow("exp result exceeds double range");
    return r;
}

Branch log_branch(const GQuat& x) noexcept {
    return branch_of(imaginary_form(x), kDegenerateRel * (1.0 + x.a1 * x.a1));
}

GQuat log(const GQuat& x) {
    const double q = imaginary_form(x);
    const double xbar = x.a1 * x.a1 + q; // unified norm form, both branches
    if (!(xbar > 0.0))
        throw NullOrNegativeNorm("norm form is not positive, no real logarithm exists");
    if (x.a2 == 0.0 && x.a3 == 0.0 && x.a4 == 0.0 && x.a1 < 0.0)
        throw NoPrincipalLog("negative scalar, imaginary direction undetermined");
    const double r = std::sqrt(xbar);
    switch (log_branch(x)) {
    case Branch::Trigonometric: {
        const double root_q = std::sqrt(q);
        const double theta = std::atan2(root_q, x.a1); // principal angle in (0, pi)
        const double g = theta / root_q;
        return GQuat{x.params, std::log(r), g * x.a2, g * x.a3, g * x.a4};
    }
    case Branch::Hyperbolic: {
        if (x.a1 <= 0.0)
            throw OutOfDomain("hyperbolic branch requires a positive scalar part");
        const double root_nq = std::sqrt(-q);
        // asinh(sqrt(-Q)/r) equals acosh(x1/r) here (cosh^2 - sinh^2 = 1 with
        // x1^2 = xbar - Q) and stays accurate as Q -> 0-.
        const double s = std::asinh(root_nq / r);
        const double g = s / root_nq;
        return GQuat{x.params, std::log(r), g * x.a2, g * x.a3, g * x.a4};
    }
    case Branch::Degenerate:
        break;
    }
    if (x.a1 <= 0.0)
        throw OutOfDomain("degenerate branch requires a positive scalar part");
    return GQuat{x.params, std::log(x.a1), x.a2 / x.a1, x.a3 / x.a1, x.a4 / x.a1};
}

} // namespace genquat
