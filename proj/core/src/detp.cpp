#include "bezsub/detp.hpp"

#include <utility>
#include <vector>

#include "bezsub/error.hpp"

namespace bezsub {

PolyMatrix to_poly_matrix(const RationalMatrix& m) {
    PolyMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(r, c) = Polynomial::constant(m.at(r, c));
    return out;
}

namespace {

Polynomial exact_poly_div(const Polynomial& num, const Polynomial& den) {
    auto [quot, rem] = divmod(num, den);
    if (!rem.is_zero())
        throw Error(ErrorCode::shape, "non-exact division in fraction-free elimination");
    return quot;
}

Polynomial det_poly_cofactor(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return Polynomial::constant(Rational(1));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(1, 0) * m.at(0, 1);
    Polynomial acc;
    for (int r = 0; r < n; ++r) {
        if (m.at(r, 0).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (int i = 0, mi = 0; i < n; ++i) {
            if (i == r) continue;
            for (int j = 1; j < n; ++j) minor.at(mi, j - 1) = m.at(i, j);
            ++mi;
        }
        Polynomial term = m.at(r, 0) * det_poly_cofactor(minor);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Polynomial det_poly_bareiss(PolyMatrix m) {
    const int n = m.rows();
    int sign = 1;
    Polynomial prev = Polynomial::constant(Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m.at(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Polynomial();
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_poly_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Polynomial();
        }
        prev = m.at(k, k);
    }
    Polynomial det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

}  // namespace

Rational det_gauss(const RationalMatrix& input) {
    if (!input.square()) throw Error(ErrorCode::shape, "determinant of non-square matrix");
    const int n = input.rows();
    if (n == 0) return Rational(1);
    RationalMatrix m = input;
    int sign = 1;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m.at(r, k).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        det *= m.at(k, k);
        const Rational inv = m.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            const Rational factor = m.at(i, k) * inv;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
            m.at(i, k) = Rational(0);
        }
    }
    return sign < 0 ? -det : det;
}

Rational det_exact(const RationalMatrix& input) {
    if (!input.square()) throw Error(ErrorCode::shape, "determinant of non-square matrix");
    const int n = input.rows();
    if (n == 0) return Rational(1);

    // Clear each row's denominators; det(input) = det(int matrix) / prod(row scales).
    std::vector<mpz_class> m(static_cast<size_t>(n) * static_cast<size_t>(n));
    mpz_class scale(1);
    for (int r = 0; r < n; ++r) {
        mpz_class row_lcm(1);
        for (int c = 0; c < n; ++c)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), input.at(r, c).den().get_mpz_t());
        for (int c = 0; c < n; ++c) {
            const Rational& v = input.at(r, c);
            m[static_cast<size_t>(r) * n + c] = v.num() * (row_lcm / v.den());
        }
        scale *= row_lcm;
    }

    auto at = [&](int r, int c) -> mpz_class& { return m[static_cast<size_t>(r) * n + c]; };
    int sign = 1;
    mpz_class prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (at(r, k) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    mpq_class det(sign < 0 ? mpz_class(-at(n - 1, n - 1)) : at(n - 1, n - 1), scale);
    det.canonicalize();
    return Rational(std::move(det));
}

PolyInBasis detp_general(const RationalMatrix& m, BasisPtr basis, int k) {
    if (!basis) throw Error(ErrorCode::basis, "null basis");
    const int s = m.cols();
    if (k < 0 || k >= s || m.rows() != s - k)
        throw Error(ErrorCode::shape, "determinantal polynomial requires an (s-k) x s matrix with 0 <= k < s");
    if (s > basis->size() + 1)
        throw Error(ErrorCode::range, "matrix wider than the basis allows");

    const int rows = s - k;
    std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i) {
        RationalMatrix sub(rows, rows);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c + 1 < rows; ++c) sub.at(r, c) = m.at(r, c);
            sub.at(r, rows - 1) = m.at(r, s - 1 - i);
        }
        coeffs[static_cast<size_t>(i)] = det_exact(sub);
    }
    return trimmed(PolyInBasis{std::move(basis), std::move(coeffs)});
}

PolyMatrix x_block(const GeneralBasis& basis, int n, int k) {
    if (n < 1 || k < 0 || k >= n) throw Error(ErrorCode::range, "x block requires 0 <= k < n");
    if (k > basis.size()) throw Error(ErrorCode::range, "x block needs omega_k in the basis");
    PolyMatrix x(k, n);
    for (int r = 0; r < k; ++r) {
        x.at(r, n - k - 1 + r) = Polynomial::constant(Rational(-1));
        x.at(r, n - 1) = basis.omega(k - r);
    }
    return x;
}

Polynomial det_polymatrix(const PolyMatrix& m) {
    if (!m.square()) throw Error(ErrorCode::shape, "determinant of non-square matrix");
    if (m.rows() < 6) return det_poly_cofactor(m);
    return det_poly_bareiss(m);
}

}  // namespace bezsub
