#pragma once

#include <vector>

#include "bezsub/basis.hpp"
#include "bezsub/bezout.hpp"
#include "bezsub/polynomial.hpp"

namespace bezsub {

/// Subresultant polynomials S_0..S_m of a pair (deg F = n > deg G = m),
/// expressed in the shared input basis, with the principal coefficients
/// s_k = coefficient of omega_k in S_k.
struct SubresultantChain {
    BasisPtr basis;
    std::vector<PolyInBasis> polys;
    std::vector<Rational> principals;
};

/// Scale factor (-1)^C(n-k,2) * a_n^(m-n) applied to the determinantal
/// polynomial of the truncated Bezout matrix. Requires n > m >= k >= 0 and
/// a_n != 0; the negative power of a_n makes this a genuine rational.
Rational coefficient_c_omega(int n, int m, int k, const Rational& a_n);

/// Scale factor (-1)^k * a_n^(m-k) used by the root-based route.
Rational coefficient_c_root(int n, int m, int k, const Rational& a_n);

/// k-th subresultant polynomial of F and G in their shared basis, computed
/// as coefficient_c_omega times the determinantal polynomial of the Bezout
/// matrix with its last k rows deleted. Requires deg F > deg G >= k >= 0
/// (callers with deg F <= deg G must reduce first; no silent swapping).
PolyInBasis bezout_subresultant(const PolyInBasis& F, const PolyInBasis& G, int k);

/// All S_k for k = 0..deg G, sharing one Bezout matrix across the chain.
SubresultantChain subresultant_chain(const PolyInBasis& F, const PolyInBasis& G);

struct GcdResult {
    int k;              ///< smallest index with nonzero principal = deg gcd
    PolyInBasis gcd;    ///< S_k, unnormalized (a rational multiple of the gcd)
};

/// Locates deg gcd(F, G) through the vanishing pattern of the principal
/// coefficients and returns S_k. Rejects G = 0.
GcdResult gcd_via_subresultants(const PolyInBasis& F, const PolyInBasis& G);

/// Independent oracle: the classical k-th subresultant polynomial from
/// determinant polynomials of the (m-k)+(n-k) row Sylvester-type submatrix.
/// Shares nothing with the Bezout route. Requires deg F > deg G >= k.
Polynomial sylvester_subresultant(const Polynomial& F, const Polynomial& G, int k);

/// Independent oracle: S_k evaluated from the roots of F. F is given as its
/// leading coefficient a_n and pairwise distinct rational roots; the
/// polynomial-valued last column is expanded by cofactors and the
/// Vandermonde denominator divided out exactly.
/// Requires count(roots) > deg G >= k.
Polynomial root_based_subresultant(const std::vector<Rational>& roots, const Rational& a_n,
                                   const Polynomial& G, int k);

}  // namespace bezsub
