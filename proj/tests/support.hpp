#pragma once

// Shared generators and algebra helpers for the test suites. Everything is
// seeded deterministically by the callers.

#include <random>
#include <vector>

#include "bezsub/basis.hpp"
#include "bezsub/bezout.hpp"
#include "bezsub/matrix.hpp"
#include "bezsub/polynomial.hpp"
#include "bezsub/rational.hpp"

namespace support {

using bezsub::BasisPtr;
using bezsub::BezoutMatrix;
using bezsub::BivariateTable;
using bezsub::Polynomial;
using bezsub::PolyMatrix;
using bezsub::Rational;
using bezsub::RationalMatrix;

inline Rational rnd_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational rnd_nonzero(std::mt19937& rng, int num_bound = 9, int den_bound = 4) {
    for (;;) {
        Rational r = rnd_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

/// Ascending coefficients of an exact-degree-`deg` polynomial.
inline std::vector<Rational> rnd_coeffs(std::mt19937& rng, int deg) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rnd_rational(rng);
    c.back() = rnd_nonzero(rng);
    return c;
}

inline Polynomial rnd_poly(std::mt19937& rng, int deg) {
    return Polynomial(rnd_coeffs(rng, deg));
}

inline BasisPtr rnd_newton_basis(std::mt19937& rng, int size) {
    std::vector<Rational> nodes;
    nodes.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) nodes.push_back(rnd_rational(rng, 4, 2));
    return bezsub::make_newton_basis(std::move(nodes));
}

/// Random valid degree-graded monic basis given as raw coefficient vectors.
inline BasisPtr rnd_custom_basis(std::mt19937& rng, int size) {
    std::vector<std::vector<Rational>> omegas;
    omegas.push_back({Rational(1)});
    for (int i = 1; i <= size; ++i) {
        std::vector<Rational> c(static_cast<size_t>(i) + 1);
        for (int j = 0; j < i; ++j) c[static_cast<size_t>(j)] = rnd_rational(rng, 4, 2);
        c.back() = Rational(1);
        omegas.push_back(std::move(c));
    }
    return bezsub::make_custom_basis(omegas);
}

/// Power, newton, or custom with equal probability.
inline BasisPtr rnd_basis(std::mt19937& rng, int size) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return bezsub::make_power_basis(size);
        case 1: return rnd_newton_basis(rng, size);
        default: return rnd_custom_basis(rng, size);
    }
}

inline std::vector<Rational> rnd_distinct_rationals(std::mt19937& rng, int count) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        Rational c = rnd_rational(rng, 12, 3);
        bool seen = false;
        for (const auto& v : out)
            if (v == c) { seen = true; break; }
        if (!seen) out.push_back(std::move(c));
    }
    return out;
}

inline RationalMatrix rnd_matrix(std::mt19937& rng, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rnd_rational(rng);
    return m;
}

inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int i = 0; i < a.cols(); ++i)
            for (int c = 0; c < b.cols(); ++c) out.at(r, c) += a.at(r, i) * b.at(i, c);
    return out;
}

/// (x - y) * Q as a coefficient table one row/column larger.
inline BivariateTable mul_x_minus_y(const BivariateTable& q) {
    BivariateTable out(q.rows() + 1, q.cols() + 1);
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) {
            out.at(i + 1, j) += q.at(i, j);
            out.at(i, j + 1) -= q.at(i, j);
        }
    return out;
}

/// Expands omega_bar(x)^T * B * omega_bar(y) into a power-basis table,
/// omega_bar descending as in the matrix convention.
inline BivariateTable bilinear_expand(const BezoutMatrix& b) {
    BivariateTable table(b.n, b.n);
    for (int r = 0; r < b.n; ++r) {
        const Polynomial& wr = b.basis->omega(b.n - 1 - r);
        for (int c = 0; c < b.n; ++c) {
            const Rational& entry = b.entries.at(r, c);
            if (entry.is_zero()) continue;
            const Polynomial& wc = b.basis->omega(b.n - 1 - c);
            for (size_t i = 0; i < wr.coeffs().size(); ++i) {
                if (wr.coeffs()[i].is_zero()) continue;
                for (size_t j = 0; j < wc.coeffs().size(); ++j)
                    table.at(static_cast<int>(i), static_cast<int>(j)) +=
                        entry * wr.coeffs()[i] * wc.coeffs()[j];
            }
        }
    }
    return table;
}

}  // namespace support
