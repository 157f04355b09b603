#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bezsub/matrix.hpp"
#include "bezsub/polynomial.hpp"
#include "bezsub/rational.hpp"

namespace bezsub {

enum class BasisKind { power, newton, custom };

/// A degree-graded monic basis omega_0..omega_s: omega_0 = 1, each omega_i
/// monic of degree exactly i. Stored ascending by index; matrix-facing code
/// builds the descending views it needs.
class GeneralBasis {
public:
    GeneralBasis(BasisKind kind, std::vector<Polynomial> omegas, std::vector<Rational> nodes = {});

    int size() const noexcept { return static_cast<int>(omegas_.size()) - 1; }
    BasisKind kind() const noexcept { return kind_; }

    /// omega_i in power-basis form; i in [0, size].
    const Polynomial& omega(int i) const;
    const std::vector<Polynomial>& omegas() const noexcept { return omegas_; }

    /// Newton nodes (lambda_s, ..., lambda_1); empty for other kinds.
    const std::vector<Rational>& nodes() const noexcept { return nodes_; }

    /// Structural equality: same basis polynomials.
    friend bool operator==(const GeneralBasis& a, const GeneralBasis& b) {
        return a.omegas_ == b.omegas_;
    }

private:
    BasisKind kind_;
    std::vector<Polynomial> omegas_;
    std::vector<Rational> nodes_;
};

using BasisPtr = std::shared_ptr<const GeneralBasis>;

/// omega_i = x^i for i = 0..s. Requires s >= 1.
BasisPtr make_power_basis(int s);

/// Newton basis for nodes (lambda_s, ..., lambda_1):
/// omega_0 = 1, omega_i = (x - lambda_i) * omega_{i-1}.
BasisPtr make_newton_basis(std::vector<Rational> nodes);

/// Builds a basis from explicit power-basis coefficient vectors
/// (entry i = coefficients of omega_i, ascending). Rejects any entry that
/// is not monic of degree i, naming the offending index.
BasisPtr make_custom_basis(const std::vector<std::vector<Rational>>& omega_coeffs);

/// Coefficient vector in a general basis: coeffs[i] multiplies omega_i.
struct PolyInBasis {
    BasisPtr basis;
    std::vector<Rational> coeffs;
};

/// Highest index with a nonzero coefficient; nullopt when all are zero.
/// Because the basis is degree-graded this equals deg(to_power(p)).
std::optional<int> degree(const PolyInBasis& p);

/// Copy with trailing zero coefficients removed.
PolyInBasis trimmed(const PolyInBasis& p);

PolyInBasis scaled(const PolyInBasis& p, const Rational& factor);

/// Unit upper triangular transition matrix U with x_bar = U * omega_bar,
/// both column vectors ordered by descending degree:
/// x_bar = (x^{dim-1},...,x^0)^T, omega_bar = (omega_{dim-1},...,omega_0)^T.
struct TransitionMatrix {
    int dim;
    RationalMatrix entries;
};

/// Requires 1 <= dim <= basis.size() + 1.
TransitionMatrix transition_matrix(const GeneralBasis& basis, int dim);

/// Expands sum coeffs[i] * omega_i into the power basis.
Polynomial to_power(const PolyInBasis& p);

/// Unique coefficient vector with to_power(result) = p; requires
/// deg p <= basis.size(). Descending-degree elimination against the
/// monic omegas, no matrix inversion.
PolyInBasis from_power(const Polynomial& p, BasisPtr basis);

}  // namespace bezsub
