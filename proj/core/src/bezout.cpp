#include "bezsub/bezout.hpp"

#include <algorithm>

#include "bezsub/error.hpp"

namespace bezsub {

namespace {

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::shape, "matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int i = 0; i < a.cols(); ++i) {
            const Rational& v = a.at(r, i);
            if (v.is_zero()) continue;
            for (int c = 0; c < b.cols(); ++c) out.at(r, c) += v * b.at(i, c);
        }
    return out;
}

}  // namespace

BivariateTable cayley_numerator(const Polynomial& F, const Polynomial& G) {
    const int dim = std::max<int>({1,
                                   static_cast<int>(F.coeffs().size()),
                                   static_cast<int>(G.coeffs().size())});
    BivariateTable n(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < i; ++j) {
            Rational v = F.coeff(i) * G.coeff(j) - F.coeff(j) * G.coeff(i);
            n.at(j, i) = -v;
            n.at(i, j) = std::move(v);
        }
    return n;
}

BivariateTable cayley_quotient(const Polynomial& F, const Polynomial& G) {
    const BivariateTable num = cayley_numerator(F, G);
    const int d = num.rows() - 1;
    if (d == 0) return BivariateTable(1, 1);
    // N = (x - y) * Q entrywise: N[i][j] = Q[i-1][j] - Q[i][j-1], so
    // Q[i-1][j] = N[i][j] + Q[i][j-1], swept column by column.
    BivariateTable q(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = d; i >= 1; --i) {
            Rational v = num.at(i, j);
            if (j > 0 && i < d) v += q.at(i, j - 1);
            q.at(i - 1, j) = std::move(v);
        }
    return q;
}

BezoutMatrix bezout_matrix_power(const Polynomial& F, const Polynomial& G) {
    const auto nd = F.degree();
    if (!nd || *nd < 1)
        throw Error(ErrorCode::degree, "bezout matrix requires deg F >= 1");
    const int n = *nd;
    if (G.degree() > n)
        throw Error(ErrorCode::degree, "bezout matrix requires deg G <= deg F");
    const BivariateTable c = cayley_quotient(F, G);
    RationalMatrix entries(n, n);
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) entries.at(r, col) = c.at(n - 1 - r, n - 1 - col);
    return BezoutMatrix{n, make_power_basis(n), std::move(entries)};
}

BezoutMatrix bezout_matrix_general(const PolyInBasis& F, const PolyInBasis& G) {
    if (!F.basis || !G.basis || !(*F.basis == *G.basis))
        throw Error(ErrorCode::basis, "bezout matrix requires a shared basis");
    const auto nd = degree(F);
    if (!nd || *nd < 1)
        throw Error(ErrorCode::degree, "bezout matrix requires deg F >= 1");
    const int n = *nd;
    if (degree(G) > n)
        throw Error(ErrorCode::degree, "bezout matrix requires deg G <= deg F");

    BezoutMatrix power = bezout_matrix_power(to_power(F), to_power(G));
    if (F.basis->kind() == BasisKind::power)
        return BezoutMatrix{n, F.basis, std::move(power.entries)};

    // Substituting x_bar = U * omega_bar into C = x_bar(x)^T B x_bar(y)
    // gives B_omega = U^T * B * U as the form in the omega coordinates.
    const TransitionMatrix u = transition_matrix(*F.basis, n);
    RationalMatrix bw = mat_mul(u.entries.transposed(), mat_mul(power.entries, u.entries));
    return BezoutMatrix{n, F.basis, std::move(bw)};
}

TruncatedBezout truncate_rows(const BezoutMatrix& B, int k) {
    if (k < 0 || k >= B.n)
        throw Error(ErrorCode::range, "row truncation requires 0 <= k < n");
    return TruncatedBezout{B.entries.top_rows(B.n - k), k, B.basis};
}

}  // namespace bezsub
