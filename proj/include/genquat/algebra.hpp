#pragma once

#include <array>

#include "genquat/errors.hpp"

namespace genquat {

// The pair (alpha, beta) selecting one algebra from the H(alpha,beta) family.
// alpha = beta = 1 gives Hamilton quaternions; alpha = 1, beta = -1 the split
// quaternions. Zero and negative values are allowed.
struct AlgebraParams {
    double alpha = 1.0;
    double beta = 1.0;
};

// Exact-bits comparison. Params select an algebra, they are never measured
// data, so there is no tolerance here.
bool same_params(const AlgebraParams& p, const AlgebraParams& q) noexcept;

// Element a1*e1 + a2*e2 + a3*e3 + a4*e4 of H(alpha,beta).
//
// Basis products: e1 is the two-sided identity and
//   e2*e2 = -alpha e1    e3*e3 = -beta e1     e4*e4 = -alpha*beta e1
//   e2*e3 =  e4          e3*e2 = -e4
//   e2*e4 = -alpha e3    e4*e2 =  alpha e3
//   e3*e4 =  beta e2     e4*e3 = -beta e2
//
// Values are immutable in spirit: every operation is a pure function of its
// inputs, so elements may be shared across threads freely.
struct GQuat {
    AlgebraParams params;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;

    std::array<double, 4> coeffs() const noexcept { return {a1, a2, a3, a4}; }
};

// Checked factory; rejects non-finite params or coefficients.
GQuat make(const AlgebraParams& params, double a1, double a2, double a3, double a4);

GQuat identity(const AlgebraParams& params) noexcept; // e1
GQuat zero(const AlgebraParams& params) noexcept;

// Componentwise linear structure. add throws ParamsMismatch when the
// operands belong to different algebras.
GQuat add(const GQuat& x, const GQuat& y);
GQuat scale(double c, const GQuat& x);

// Bilinear product determined by the basis table above.
GQuat mul(const GQuat& x, const GQuat& y);

// Q(X) = alpha x2^2 + beta x3^2 + alpha beta x4^2, the quadratic form on the
// imaginary part. Its sign classifies the analytic branch of exp and log.
double imaginary_form(const GQuat& x) noexcept;

// x1^2 + Q(X). Multiplicative over mul, and equals e^{2 m1} on the image of
// exp in both branches.
double norm_form(const GQuat& x) noexcept;

// 4x4 matrix of left multiplication: row k gives the k-th component of m*x
// as a linear function of (x1..x4).
struct RepMatrix {
    std::array<std::array<double, 4>, 4> m{};
};

// rep_matrix(m) * coeffs(x) == coeffs(mul(m, x)) up to rounding.
RepMatrix rep_matrix(const GQuat& m) noexcept;

std::array<double, 4> mat_vec(const RepMatrix& r, const std::array<double, 4>& v) noexcept;

} // namespace genquat
