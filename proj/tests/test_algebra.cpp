#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "genquat/algebra.hpp"
#include "genquat/oracle.hpp"

using namespace genquat;

namespace {

const double kGrid[6] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

AlgebraParams grid_params(int i) {
    return AlgebraParams{kGrid[(i / 6) % 6], kGrid[i % 6]};
}

// Independent multiplication oracle: literal basis-product table, entry
// (target index, sign, alpha power, beta power), accumulated term by term.
// Kept free of the formula expansion used by mul().
struct TableEntry {
    int k;
    int sign;
    int pa;
    int pb;
};

constexpr TableEntry kBasisTable[4][4] = {
    {{0, 1, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0}, {3, 1, 0, 0}},
    {{1, 1, 0, 0}, {0, -1, 1, 0}, {3, 1, 0, 0}, {2, -1, 1, 0}},
    {{2, 1, 0, 0}, {3, -1, 0, 0}, {0, -1, 0, 1}, {1, 1, 0, 1}},
    {{3, 1, 0, 0}, {2, 1, 1, 0}, {1, -1, 0, 1}, {0, -1, 1, 1}},
};

GQuat mul_by_table(const GQuat& x, const GQuat& y) {
    REQUIRE(same_params(x.params, y.params));
    const auto xc = x.coeffs();
    const auto yc = y.coeffs();
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const TableEntry e = kBasisTable[i][j];
            double coeff = e.sign;
            for (int n = 0; n < e.pa; ++n)
                coeff *= x.params.alpha;
            for (int n = 0; n < e.pb; ++n)
                coeff *= x.params.beta;
            out[e.k] += xc[i] * yc[j] * coeff;
        }
    }
    return GQuat{x.params, out[0], out[1], out[2], out[3]};
}

double max_abs(const GQuat& x) {
    const auto c = x.coeffs();
    return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
}

double max_abs_diff(const GQuat& x, const GQuat& y) {
    return compare(x, y, ToleranceConfig{1.0, 1.0}).max_abs_diff;
}

void check_equal(const GQuat& x, const std::array<double, 4>& want) {
    const auto c = x.coeffs();
    for (int i = 0; i < 4; ++i)
        CHECK(c[i] == want[i]);
}

} // namespace

TEST_CASE("make validates inputs") {
    const AlgebraParams p{1.0, 1.0};
    check_equal(make(p, 1, 0, 0, 0), {1, 0, 0, 0});
    const GQuat e2 = make(AlgebraParams{2.0, 3.0}, 0, 1, 0, 0);
    check_equal(e2, {0, 1, 0, 0});
    CHECK(e2.params.alpha == 2.0);

    const double nan = std::nan("");
    CHECK_THROWS_AS(make(p, nan, 0, 0, 0), NonFiniteInput);
    CHECK_THROWS_AS(make(p, 0, 0, 0, INFINITY), NonFiniteInput);
    CHECK_THROWS_AS(make(AlgebraParams{nan, 1.0}, 0, 0, 0, 0), NonFiniteInput);
}

TEST_CASE("same_params is exact") {
    CHECK(same_params(AlgebraParams{1, 1}, AlgebraParams{1, 1}));
    CHECK_FALSE(same_params(AlgebraParams{1, 1}, AlgebraParams{1, 2}));
    CHECK_FALSE(same_params(AlgebraParams{1 + 1e-15, 1}, AlgebraParams{1, 1}));
}

TEST_CASE("linear operations") {
    const AlgebraParams p{1.0, 1.0};
    const GQuat x = make(p, 1, 2, 0, 0);
    check_equal(add(x, zero(p)), {1, 2, 0, 0});
    check_equal(scale(1.0, x), {1, 2, 0, 0});
    check_equal(add(x, make(p, 0, 0, 1, 1)), {1, 2, 1, 1});

    const GQuat other = make(AlgebraParams{1.0, 2.0}, 1, 0, 0, 0);
    CHECK_THROWS_AS(add(x, other), ParamsMismatch);
    CHECK_THROWS_AS(mul(x, other), ParamsMismatch);
}

TEST_CASE("basis products match the table") {
    const GQuat e2 = make(AlgebraParams{2.0, 1.0}, 0, 1, 0, 0);
    check_equal(mul(e2, e2), {-2, 0, 0, 0});

    // every basis pair, a couple of parameter choices
    for (const AlgebraParams p : {AlgebraParams{1, 1}, AlgebraParams{-0.5, 2}}) {
        GQuat basis[4] = {make(p, 1, 0, 0, 0), make(p, 0, 1, 0, 0), make(p, 0, 0, 1, 0),
                          make(p, 0, 0, 0, 1)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(max_abs_diff(mul(basis[i], basis[j]),
                                   mul_by_table(basis[i], basis[j])) == 0.0);
    }
}

TEST_CASE("identity is exact") {
    for (int i = 0; i < 40; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat x = random_gq(p, 2.0, 100 + i);
        check_equal(mul(identity(p), x), x.coeffs());
        check_equal(mul(x, identity(p)), x.coeffs());
    }
}

TEST_CASE("worked product in H(1,1)") {
    const AlgebraParams p{1.0, 1.0};
    const GQuat x = make(p, 1, 2, 0, 0);
    const GQuat y = make(p, 0, 0, 1, 1);
    const GQuat z = mul(x, y);
    check_equal(z, {0, 0, -1, 3}); // frozen from the basis-table expansion
    check_equal(mul_by_table(x, y), {0, 0, -1, 3});

    CHECK(norm_form(x) == 5.0);
    CHECK(norm_form(y) == 2.0);
    CHECK(norm_form(z) == 10.0);
}

TEST_CASE("mul agrees with the table oracle on random input") {
    for (int i = 0; i < 300; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat x = random_gq(p, 2.0, 1000 + 2 * i);
        const GQuat y = random_gq(p, 2.0, 1001 + 2 * i);
        const GQuat got = mul(x, y);
        const GQuat want = mul_by_table(x, y);
        CHECK(max_abs_diff(got, want) <= 1e-14 * (1.0 + max_abs(want)));
    }
}

TEST_CASE("anticommutators are exact") {
    for (int i = 0; i < 36; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat e2 = make(p, 0, 1, 0, 0);
        const GQuat e3 = make(p, 0, 0, 1, 0);
        const GQuat e4 = make(p, 0, 0, 0, 1);
        check_equal(mul(e2, e3), scale(-1.0, mul(e3, e2)).coeffs());
        check_equal(mul(e2, e4), scale(-1.0, mul(e4, e2)).coeffs());
        check_equal(mul(e3, e4), scale(-1.0, mul(e4, e3)).coeffs());
    }
}

TEST_CASE("associativity and bilinearity") {
    for (int i = 0; i < 300; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat x = random_gq(p, 2.0, 5000 + 3 * i);
        const GQuat y = random_gq(p, 2.0, 5001 + 3 * i);
        const GQuat z = random_gq(p, 2.0, 5002 + 3 * i);

        const GQuat xy = mul(x, y);
        const GQuat yz = mul(y, z);
        const GQuat left = mul(xy, z);
        const GQuat right = mul(x, yz);
        const double mag = std::max(
            {max_abs(x), max_abs(y), max_abs(z), max_abs(xy), max_abs(yz), max_abs(left),
             max_abs(right)});
        CHECK(max_abs_diff(left, right) <= 1e-12 * (1.0 + mag));

        const GQuat dist_l = mul(add(x, y), z);
        const GQuat dist_r = add(mul(x, z), mul(y, z));
        CHECK(max_abs_diff(dist_l, dist_r) <= 1e-12 * (1.0 + max_abs(dist_l)));

        const GQuat dist2_l = mul(x, add(y, z));
        const GQuat dist2_r = add(mul(x, y), mul(x, z));
        CHECK(max_abs_diff(dist2_l, dist2_r) <= 1e-12 * (1.0 + max_abs(dist2_l)));
    }
}

TEST_CASE("imaginary and norm forms") {
    CHECK(imaginary_form(make(AlgebraParams{1, 1}, 0, 1, 0, 0)) == 1.0);
    CHECK(imaginary_form(make(AlgebraParams{1, -1}, 0, 0, 1, 0)) == -1.0);
    CHECK(imaginary_form(make(AlgebraParams{1, 1}, 5, 3, 4, 0)) == 25.0);

    CHECK(norm_form(identity(AlgebraParams{1, 1})) == 1.0);
    CHECK(norm_form(make(AlgebraParams{2, 1}, 0, 1, 0, 0)) == 2.0);
}

TEST_CASE("norm form is multiplicative") {
    for (int i = 0; i < 300; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat x = random_gq(p, 2.0, 9000 + 2 * i);
        const GQuat y = random_gq(p, 2.0, 9001 + 2 * i);
        const double lhs = norm_form(mul(x, y));
        const double rhs = norm_form(x) * norm_form(y);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs) + std::abs(rhs)));
    }
}

TEST_CASE("rep matrix") {
    const AlgebraParams p{1.0, -0.5};
    const GQuat scalar = make(p, 3.25, 0, 0, 0);
    const RepMatrix r = rep_matrix(scalar);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(r.m[i][j] == (i == j ? 3.25 : 0.0));

    // first column is the element itself: m * e1 = m
    const GQuat m = random_gq(p, 2.0, 77);
    const RepMatrix rm = rep_matrix(m);
    const auto mc = m.coeffs();
    for (int i = 0; i < 4; ++i)
        CHECK(rm.m[i][0] == mc[i]);
}

TEST_CASE("rep matrix is the left-multiplication homomorphism") {
    for (int i = 0; i < 300; ++i) {
        const AlgebraParams p = grid_params(i);
        const GQuat m = random_gq(p, 2.0, 40000 + 2 * i);
        const GQuat x = random_gq(p, 2.0, 40001 + 2 * i);
        const auto via_matrix = mat_vec(rep_matrix(m), x.coeffs());
        const auto via_mul = mul(m, x).coeffs();
        double dev = 0.0;
        double mag = 0.0;
        for (int c = 0; c < 4; ++c) {
            dev = std::max(dev, std::abs(via_matrix[c] - via_mul[c]));
            mag = std::max({mag, std::abs(via_matrix[c]), std::abs(via_mul[c])});
        }
        CHECK(dev <= 1e-13 * (1.0 + mag));
    }
}
