#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bezsub/detp.hpp"
#include "bezsub/error.hpp"
#include "support.hpp"

using namespace bezsub;

namespace {

Polynomial poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
}

RationalMatrix mat(int rows, int cols, std::initializer_list<long> row_major) {
    std::vector<Rational> data;
    for (long v : row_major) data.emplace_back(v);
    return RationalMatrix(rows, cols, std::move(data));
}

BasisPtr nodes_102_basis() {
    return make_newton_basis({Rational(1), Rational(0), Rational(2)});
}

}  // namespace

TEST_CASE("exact determinants of small matrices") {
    CHECK(det_exact(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == Rational(1));
    CHECK(det_exact(mat(2, 2, {1, 1, 1, 0})) == Rational(-1));
    CHECK(det_exact(mat(2, 2, {1, 1, 1, 1})) == Rational(0));
    CHECK(det_exact(mat(1, 1, {-7})) == Rational(-7));
    CHECK(det_exact(RationalMatrix(0, 0)) == Rational(1));
    CHECK_THROWS_AS(det_exact(RationalMatrix(2, 3)), Error);
    CHECK_THROWS_AS(det_gauss(RationalMatrix(2, 3)), Error);

    // Rational entries force the denominator-clearing path.
    RationalMatrix q(2, 2);
    q.at(0, 0) = Rational(1, 2);
    q.at(0, 1) = Rational(1, 3);
    q.at(1, 0) = Rational(1, 5);
    q.at(1, 1) = Rational(1, 7);
    CHECK(det_exact(q) == Rational(1, 14) - Rational(1, 15));
}

TEST_CASE("bareiss agrees with rational gaussian elimination") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        RationalMatrix m = support::rnd_matrix(rng, n, n);
        // Inject singularity in a third of the trials.
        if (n > 1 && trial % 3 == 0) {
            const Rational f = support::rnd_rational(rng);
            for (int c = 0; c < n; ++c) m.at(n - 1, c) = f * m.at(0, c);
        }
        CHECK(det_exact(m) == det_gauss(m));
    }
}

TEST_CASE("determinantal polynomial of the truncated running example") {
    const BasisPtr b = nodes_102_basis();
    const RationalMatrix m = mat(2, 3, {1, 1, 1, 1, 0, 1});
    const PolyInBasis d = detp_general(m, b, 1);
    REQUIRE(d.coeffs.size() == 2);
    CHECK(d.coeffs[0] == Rational(0));
    CHECK(d.coeffs[1] == Rational(-1));
    CHECK(to_power(d) == poly({2, -1}));  // -omega_1 = -(x-2)
}

TEST_CASE("determinantal polynomial at k = 0 is the plain determinant") {
    const BasisPtr b = nodes_102_basis();
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        const int s = std::uniform_int_distribution<int>(1, 4)(rng);
        const RationalMatrix m = support::rnd_matrix(rng, s, s);
        const PolyInBasis d = detp_general(m, b, 0);
        CHECK(to_power(d) == Polynomial::constant(det_exact(m)));
    }
}

TEST_CASE("determinantal polynomial vanishes with equal shared columns") {
    const BasisPtr b = nodes_102_basis();
    // s = 4, k = 1: columns 0..1 are shared by every minor; make them equal.
    std::mt19937 rng(31);
    RationalMatrix m = support::rnd_matrix(rng, 3, 4);
    for (int r = 0; r < 3; ++r) m.at(r, 1) = m.at(r, 0);
    const PolyInBasis d = detp_general(m, b, 1);
    CHECK(degree(d) == std::nullopt);
}

TEST_CASE("determinantal polynomial shape errors") {
    const BasisPtr b = nodes_102_basis();
    CHECK_THROWS_AS(detp_general(mat(2, 3, {1, 2, 3, 4, 5, 6}), b, 0), Error);  // rows != s-k
    CHECK_THROWS_AS(detp_general(mat(1, 5, {1, 2, 3, 4, 5}), b, 4), Error);     // s > size+1
    CHECK_THROWS_AS(detp_general(mat(2, 2, {1, 2, 3, 4}), b, -1), Error);
}

TEST_CASE("detp respects column scaling") {
    std::mt19937 rng(41);
    const BasisPtr b = support::rnd_newton_basis(rng, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const int s = 5, k = 2;
        const RationalMatrix m = support::rnd_matrix(rng, s - k, s);
        const Rational factor = support::rnd_nonzero(rng);
        const PolyInBasis base = detp_general(m, b, k);

        // Scaling a shared column scales every coefficient.
        RationalMatrix shared = m;
        for (int r = 0; r < s - k; ++r) shared.at(r, 0) *= factor;
        CHECK(to_power(detp_general(shared, b, k)) == factor * to_power(base));

        // Scaling the column owned by omega_i scales only that coefficient.
        const int i = 1;  // column s-1-i
        RationalMatrix owned = m;
        for (int r = 0; r < s - k; ++r) owned.at(r, s - 1 - i) *= factor;
        const PolyInBasis scaled_d = detp_general(owned, b, k);
        for (int j = 0; j <= k; ++j) {
            const Rational expect = (j == i ? factor : Rational(1)) *
                                    (j < static_cast<int>(base.coeffs.size()) ? base.coeffs[j]
                                                                              : Rational(0));
            const Rational got = j < static_cast<int>(scaled_d.coeffs.size()) ? scaled_d.coeffs[j]
                                                                              : Rational(0);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("x block shapes") {
    const BasisPtr b = nodes_102_basis();

    const PolyMatrix x31 = x_block(*b, 3, 1);
    REQUIRE(x31.rows() == 1);
    REQUIRE(x31.cols() == 3);
    CHECK(x31.at(0, 0).is_zero());
    CHECK(x31.at(0, 1) == poly({-1}));
    CHECK(x31.at(0, 2) == poly({-2, 1}));

    const PolyMatrix empty = x_block(*b, 3, 0);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 3);

    const PolyMatrix x42 = x_block(*b, 4, 2);
    REQUIRE(x42.rows() == 2);
    REQUIRE(x42.cols() == 4);
    CHECK(x42.at(0, 1) == poly({-1}));
    CHECK(x42.at(0, 3) == b->omega(2));
    CHECK(x42.at(1, 2) == poly({-1}));
    CHECK(x42.at(1, 3) == b->omega(1));
    CHECK(x42.at(0, 0).is_zero());
    CHECK(x42.at(0, 2).is_zero());
    CHECK(x42.at(1, 0).is_zero());
    CHECK(x42.at(1, 1).is_zero());

    CHECK_THROWS_AS(x_block(*b, 3, 3), Error);
    CHECK_THROWS_AS(x_block(*b, 3, -1), Error);
}

TEST_CASE("polynomial determinants") {
    const BasisPtr b = nodes_102_basis();
    PolyMatrix diag(2, 2);
    diag.at(0, 0) = b->omega(1);
    diag.at(1, 1) = b->omega(1);
    CHECK(det_polymatrix(diag) == poly({4, -4, 1}));

    PolyMatrix zero_row(3, 3);
    for (int c = 0; c < 3; ++c) {
        zero_row.at(0, c) = poly({1, 1});
        zero_row.at(2, c) = poly({c, 2});
    }
    CHECK(det_polymatrix(zero_row).is_zero());

    CHECK(det_polymatrix(PolyMatrix(0, 0)) == poly({1}));
    CHECK_THROWS_AS(det_polymatrix(PolyMatrix(2, 3)), Error);
}

TEST_CASE("stacked block identity on the running example") {
    const BasisPtr b = nodes_102_basis();
    const RationalMatrix m = mat(2, 3, {1, 1, 1, 1, 0, 1});
    const PolyMatrix stacked = vstack(to_poly_matrix(m), x_block(*b, 3, 1));
    const Polynomial det = det_polymatrix(stacked);
    CHECK(det == poly({2, -1}));  // -omega_1
    CHECK(det == to_power(detp_general(m, b, 1)));
}

TEST_CASE("stacked block identity on random instances") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const BasisPtr b = support::rnd_newton_basis(rng, n);
        const RationalMatrix m = support::rnd_matrix(rng, n - k, n);
        const PolyMatrix stacked = vstack(to_poly_matrix(m), x_block(*b, n, k));
        CHECK(det_polymatrix(stacked) == to_power(detp_general(m, b, k)));
    }
}

TEST_CASE("fraction-free polynomial elimination matches scalar determinants") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        // det(M + xI) evaluated at t equals det(M + tI); 7x7 takes the
        // elimination path, 4x4 the cofactor path.
        for (const int n : {4, 7}) {
            const RationalMatrix m = support::rnd_matrix(rng, n, n);
            PolyMatrix shifted = to_poly_matrix(m);
            for (int i = 0; i < n; ++i)
                shifted.at(i, i) = shifted.at(i, i) + Polynomial::monomial(1);
            const Polynomial charpoly = det_polymatrix(shifted);
            const Rational t = support::rnd_rational(rng);
            RationalMatrix mt = m;
            for (int i = 0; i < n; ++i) mt.at(i, i) += t;
            CHECK(charpoly.eval(t) == det_exact(mt));
        }
    }
}
