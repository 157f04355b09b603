#include "bezsub/subres.hpp"

#include <utility>

#include "bezsub/detp.hpp"
#include "bezsub/error.hpp"

namespace bezsub {

namespace {

void check_degree_order(std::optional<int> n, std::optional<int> m, int k) {
    if (!n || *n < 1)
        throw Error(ErrorCode::degree, "subresultants require deg F >= 1");
    if (!m || *m >= *n)
        throw Error(ErrorCode::degree,
                    "subresultants require deg F > deg G; reduce the pair first");
    if (k < 0 || k > *m)
        throw Error(ErrorCode::range, "subresultant index requires 0 <= k <= deg G");
}

PolyInBasis subresultant_from_matrix(const BezoutMatrix& bw, int m, const Rational& a_n, int k) {
    const TruncatedBezout trunc = truncate_rows(bw, k);
    PolyInBasis detp = detp_general(trunc.rows, trunc.basis, k);
    return scaled(detp, coefficient_c_omega(bw.n, m, k, a_n));
}

}  // namespace

Rational coefficient_c_omega(int n, int m, int k, const Rational& a_n) {
    if (!(n > m && m >= k && k >= 0))
        throw Error(ErrorCode::degree, "scale factor requires n > m >= k >= 0");
    if (a_n.is_zero()) throw Error(ErrorCode::division, "zero leading coefficient");
    const long c2 = static_cast<long>(n - k) * (n - k - 1) / 2;
    Rational value = a_n.pow(m - n);
    return (c2 % 2 != 0) ? -value : value;
}

Rational coefficient_c_root(int n, int m, int k, const Rational& a_n) {
    if (!(n > m && m >= k && k >= 0))
        throw Error(ErrorCode::degree, "scale factor requires n > m >= k >= 0");
    if (a_n.is_zero()) throw Error(ErrorCode::division, "zero leading coefficient");
    Rational value = a_n.pow(m - k);
    return (k % 2 != 0) ? -value : value;
}

PolyInBasis bezout_subresultant(const PolyInBasis& F, const PolyInBasis& G, int k) {
    const PolyInBasis f = trimmed(F), g = trimmed(G);
    const auto n = degree(f), m = degree(g);
    check_degree_order(n, m, k);
    const BezoutMatrix bw = bezout_matrix_general(f, g);
    return subresultant_from_matrix(bw, *m, f.coeffs.back(), k);
}

SubresultantChain subresultant_chain(const PolyInBasis& F, const PolyInBasis& G) {
    const PolyInBasis f = trimmed(F), g = trimmed(G);
    const auto n = degree(f), m = degree(g);
    check_degree_order(n, m, 0);
    const BezoutMatrix bw = bezout_matrix_general(f, g);
    const Rational a_n = f.coeffs.back();

    SubresultantChain chain;
    chain.basis = f.basis;
    chain.polys.reserve(static_cast<size_t>(*m) + 1);
    chain.principals.reserve(static_cast<size_t>(*m) + 1);
    for (int k = 0; k <= *m; ++k) {
        PolyInBasis sk = subresultant_from_matrix(bw, *m, a_n, k);
        chain.principals.push_back(static_cast<size_t>(k) < sk.coeffs.size()
                                       ? sk.coeffs[static_cast<size_t>(k)]
                                       : Rational(0));
        chain.polys.push_back(std::move(sk));
    }
    return chain;
}

GcdResult gcd_via_subresultants(const PolyInBasis& F, const PolyInBasis& G) {
    if (!degree(G))
        throw Error(ErrorCode::degree, "gcd via subresultants rejects G = 0");
    SubresultantChain chain = subresultant_chain(F, G);
    for (size_t k = 0; k < chain.principals.size(); ++k) {
        if (!chain.principals[k].is_zero())
            return GcdResult{static_cast<int>(k), std::move(chain.polys[k])};
    }
    // Unreachable: deg gcd <= deg G, so some principal below is nonzero.
    throw Error(ErrorCode::range, "no nonzero principal subresultant coefficient");
}

Polynomial sylvester_subresultant(const Polynomial& F, const Polynomial& G, int k) {
    const auto nd = F.degree(), md = G.degree();
    check_degree_order(nd, md, k);
    const int n = *nd, m = *md;

    // Rows: x^{m-k-1}F ... x^0 F, then x^{n-k-1}G ... x^0 G; columns hold
    // the coefficients of x^{n+m-k-1} ... x^0 (descending).
    const int rows = (m - k) + (n - k);
    const int cols = n + m - k;
    RationalMatrix mat(rows, cols);
    for (int i = 0; i < m - k; ++i) {
        const int shift = m - k - 1 - i;  // row i = x^shift * F
        for (int c = 0; c < cols; ++c) mat.at(i, c) = F.coeff(cols - 1 - c - shift);
    }
    for (int i = 0; i < n - k; ++i) {
        const int shift = n - k - 1 - i;
        for (int c = 0; c < cols; ++c) mat.at(m - k + i, c) = G.coeff(cols - 1 - c - shift);
    }

    // S_k = sum_j det(first rows-1 columns | column of x^j) * x^j.
    std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
    for (int j = 0; j <= k; ++j) {
        RationalMatrix sub(rows, rows);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c + 1 < rows; ++c) sub.at(r, c) = mat.at(r, c);
            sub.at(r, rows - 1) = mat.at(r, cols - 1 - j);
        }
        coeffs[static_cast<size_t>(j)] = det_gauss(sub);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial root_based_subresultant(const std::vector<Rational>& roots, const Rational& a_n,
                                   const Polynomial& G, int k) {
    const int n = static_cast<int>(roots.size());
    if (n < 1) throw Error(ErrorCode::degree, "root-based route requires at least one root");
    if (a_n.is_zero()) throw Error(ErrorCode::division, "zero leading coefficient");
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw Error(ErrorCode::range, "root-based route requires pairwise distinct roots");
    const auto md = G.degree();
    check_degree_order(n, md, k);
    const int m = *md;

    // Powers alpha_j^e for e = 0..n-1 and the values G(alpha_j).
    std::vector<std::vector<Rational>> pow(roots.size());
    std::vector<Rational> gval(roots.size());
    for (size_t j = 0; j < roots.size(); ++j) {
        pow[j].assign(static_cast<size_t>(n), Rational(1));
        for (int e = 1; e < n; ++e) pow[j][static_cast<size_t>(e)] = pow[j][static_cast<size_t>(e - 1)] * roots[j];
        gval[j] = G.eval(roots[j]);
    }

    // Numerator is (n+1) x (n+1): the upper n-k rows hold
    // alpha_j^{n-k-1-r} G(alpha_j) with a zero last column; the lower k+1
    // rows hold alpha_j^{k-i} with x^{k-i} in the last column. Expanding
    // along the last column leaves n x n rational minors.
    auto minor_without_lower_row = [&](int skip) {
        RationalMatrix sub(n, n);
        int r = 0;
        for (int u = 0; u < n - k; ++u, ++r)
            for (int j = 0; j < n; ++j)
                sub.at(r, j) = pow[static_cast<size_t>(j)][static_cast<size_t>(n - k - 1 - u)] * gval[static_cast<size_t>(j)];
        for (int i = 0; i <= k; ++i) {
            if (i == skip) continue;
            for (int j = 0; j < n; ++j)
                sub.at(r, j) = pow[static_cast<size_t>(j)][static_cast<size_t>(k - i)];
            ++r;
        }
        return sub;
    };

    std::vector<Rational> numer(static_cast<size_t>(k) + 1, Rational(0));
    for (int i = 0; i <= k; ++i) {
        // Entry x^{k-i} sits at row n-k+i, column n (0-based) of the
        // (n+1) x (n+1) numerator.
        const Rational d = det_gauss(minor_without_lower_row(i));
        const bool negative = ((n - k + i) + n) % 2 != 0;
        numer[static_cast<size_t>(k - i)] = negative ? -d : d;
    }

    RationalMatrix vand(n, n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j)
            vand.at(r, j) = pow[static_cast<size_t>(j)][static_cast<size_t>(n - 1 - r)];
    const Rational vdet = det_gauss(vand);

    const Rational scale = coefficient_c_root(n, m, k, a_n) / vdet;
    for (auto& c : numer) c *= scale;
    return Polynomial(std::move(numer));
}

}  // namespace bezsub
