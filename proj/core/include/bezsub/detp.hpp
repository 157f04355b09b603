#pragma once

#include "bezsub/basis.hpp"
#include "bezsub/matrix.hpp"
#include "bezsub/polynomial.hpp"

namespace bezsub {

/// Exact determinant via fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix, rescaled back. det of the empty
/// matrix is 1.
Rational det_exact(const RationalMatrix& m);

/// Plain rational Gaussian elimination; kept as an independent cross-check
/// for det_exact and used by the oracle routes.
Rational det_gauss(const RationalMatrix& m);

/// Determinantal polynomial of an (s-k) x s matrix M in the given basis:
/// sum over i = 0..k of det(M_hat_i) * omega_i, where M_hat_i consists of
/// the first s-k-1 columns of M plus column s-1-i.
PolyInBasis detp_general(const RationalMatrix& m, BasisPtr basis, int k);

/// The k x n block stacked under a truncated Bezout matrix to express the
/// determinantal polynomial as a single determinant: row r carries -1 in
/// column n-k-1+r and omega_{k-r} in the last column. k = 0 yields an
/// empty 0 x n matrix. Requires 0 <= k < n and k <= basis.size().
PolyMatrix x_block(const GeneralBasis& basis, int n, int k);

/// Exact determinant over the polynomial ring: cofactor expansion below
/// size 6, fraction-free elimination above.
Polynomial det_polymatrix(const PolyMatrix& m);

}  // namespace bezsub
