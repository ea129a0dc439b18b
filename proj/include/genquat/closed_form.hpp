#pragma once

#include "genquat/algebra.hpp"

namespace genquat {

// Analytic regime of the closed forms, classified by the sign of the
// imaginary quadratic form Q: trigonometric for Q > 0, hyperbolic for Q < 0,
// degenerate on the null cone Q = 0.
enum class Branch {
    Trigonometric,
    Hyperbolic,
    Degenerate,
};

// "trig" / "hyp" / "degen"
const char* branch_label(Branch b) noexcept;

// Classify a quadratic-form value against an absolute threshold:
// Trigonometric if form > threshold, Hyperbolic if form < -threshold,
// Degenerate otherwise. threshold must be >= 0.
Branch branch_of(double form, double threshold) noexcept;

// mbar = -imaginary_form(m). exp(m) behaves trigonometrically when mbar < 0
// and hyperbolically when mbar > 0.
double mbar(const GQuat& m) noexcept;

// Factored form of the exponential:
//   exp(m) = scalar_factor * (f0 e1 + f1 (m2 e2 + m3 e3 + m4 e4))
// with f0 = cosh(sqrt(mbar)) or cos(sqrt(-mbar)) and f1 the matching
// sinh(u)/u or sin(u)/u factor; f0 = f1 = 1 at mbar = 0.
struct ExpFactors {
    double scalar_factor; // e^{m1}
    double f0;
    double f1;
    Branch branch;
};

ExpFactors exp_factors(const GQuat& m);

// Closed-form exponential. Total on finite inputs; throws Overflow when the
// result exceeds double range.
GQuat exp(const GQuat& m);

// Hamilton-quaternion exponential written out independently of exp(), used
// to cross-check the alpha = beta = 1 specialization. Throws ParamsMismatch
// unless params are exactly (1, 1).
GQuat quat_exp_reference(const GQuat& m);

// Branch the principal logarithm of x will take (pure classification, no
// domain checks).
Branch log_branch(const GQuat& x) noexcept;

// Principal logarithm. With Q = imaginary_form(x) and r = sqrt(norm_form(x)):
//   trigonometric: m1 = ln r, m_k = x_k * theta / sqrt(Q),
//                  theta = atan2(sqrt(Q), x1) in (0, pi)
//   hyperbolic:    m1 = ln r, m_k = x_k * s / sqrt(-Q), s = acosh(x1/r) >= 0
//   degenerate:    m1 = ln x1, m_k = x_k / x1
// Throws NullOrNegativeNorm when norm_form(x) <= 0, NoPrincipalLog for a
// negative scalar with zero imaginary part, OutOfDomain for the hyperbolic
// or degenerate branch with x1 <= 0.
GQuat log(const GQuat& x);

} // namespace genquat
