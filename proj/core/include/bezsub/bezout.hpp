#pragma once

#include "bezsub/basis.hpp"
#include "bezsub/matrix.hpp"
#include "bezsub/polynomial.hpp"

namespace bezsub {

/// Bivariate coefficient table: entry (i, j) holds the x^i y^j coefficient.
using BivariateTable = RationalMatrix;

/// N(x,y) = F(x)G(y) - F(y)G(x), antisymmetric. Table is square of
/// dimension max(deg F, deg G) + 1 (1x1 zero table for two constants).
BivariateTable cayley_numerator(const Polynomial& F, const Polynomial& G);

/// C(x,y) = N(x,y) / (x - y), the Cayley quotient; exact division via the
/// antidiagonal recurrence. For deg F = n >= 1, deg G <= n the table is n x n.
BivariateTable cayley_quotient(const Polynomial& F, const Polynomial& G);

/// n x n symmetric matrix of the Cayley quotient as a bilinear form in the
/// basis, ordered descending: entry (r, c) pairs omega_{n-1-r}(x) with
/// omega_{n-1-c}(y).
struct BezoutMatrix {
    int n;
    BasisPtr basis;
    RationalMatrix entries;
};

/// Bezout matrix in the power basis; requires deg F = n >= 1 and deg G <= n.
BezoutMatrix bezout_matrix_power(const Polynomial& F, const Polynomial& G);

/// Bezout matrix in the shared general basis of F and G, computed as the
/// congruence B_omega = U^T * B * U of the power-basis matrix B, where U is
/// the unit upper triangular transition with x_bar = U * omega_bar.
BezoutMatrix bezout_matrix_general(const PolyInBasis& F, const PolyInBasis& G);

/// First n-k rows of a Bezout matrix.
struct TruncatedBezout {
    RationalMatrix rows;
    int k;
    BasisPtr basis;
};

/// Requires 0 <= k < n.
TruncatedBezout truncate_rows(const BezoutMatrix& B, int k);

}  // namespace bezsub
