#include "bezsub/basis.hpp"

#include <string>
#include <utility>

#include "bezsub/error.hpp"

namespace bezsub {

GeneralBasis::GeneralBasis(BasisKind kind, std::vector<Polynomial> omegas,
                           std::vector<Rational> nodes)
    : kind_(kind), omegas_(std::move(omegas)), nodes_(std::move(nodes)) {
    if (omegas_.size() < 2) throw Error(ErrorCode::basis, "basis needs size >= 1");
    for (size_t i = 0; i < omegas_.size(); ++i) {
        const auto& w = omegas_[i];
        if (w.degree() != static_cast<int>(i))
            throw Error(ErrorCode::basis,
                        "omega " + std::to_string(i) + " must have degree " + std::to_string(i));
        if (w.leading() != Rational(1))
            throw Error(ErrorCode::basis, "omega " + std::to_string(i) + " is not monic");
    }
}

const Polynomial& GeneralBasis::omega(int i) const {
    if (i < 0 || i > size()) throw Error(ErrorCode::range, "basis index out of range");
    return omegas_[static_cast<size_t>(i)];
}

BasisPtr make_power_basis(int s) {
    if (s < 1) throw Error(ErrorCode::range, "power basis requires size >= 1");
    std::vector<Polynomial> omegas;
    omegas.reserve(static_cast<size_t>(s) + 1);
    for (int i = 0; i <= s; ++i) omegas.push_back(Polynomial::monomial(i));
    return std::make_shared<GeneralBasis>(BasisKind::power, std::move(omegas));
}

BasisPtr make_newton_basis(std::vector<Rational> nodes) {
    if (nodes.empty()) throw Error(ErrorCode::range, "newton basis requires at least one node");
    const int s = static_cast<int>(nodes.size());
    std::vector<Polynomial> omegas(static_cast<size_t>(s) + 1);
    omegas[0] = Polynomial::constant(Rational(1));
    // nodes = (lambda_s, ..., lambda_1), so lambda_i = nodes[s - i].
    for (int i = 1; i <= s; ++i) {
        const Rational& lambda = nodes[static_cast<size_t>(s - i)];
        Polynomial linear({-lambda, Rational(1)});
        omegas[static_cast<size_t>(i)] = linear * omegas[static_cast<size_t>(i - 1)];
    }
    return std::make_shared<GeneralBasis>(BasisKind::newton, std::move(omegas), std::move(nodes));
}

BasisPtr make_custom_basis(const std::vector<std::vector<Rational>>& omega_coeffs) {
    if (omega_coeffs.size() < 2)
        throw Error(ErrorCode::basis, "custom basis needs at least omega 0 and omega 1");
    std::vector<Polynomial> omegas;
    omegas.reserve(omega_coeffs.size());
    for (size_t i = 0; i < omega_coeffs.size(); ++i) {
        Polynomial w(omega_coeffs[i]);
        if (w.degree() != static_cast<int>(i))
            throw Error(ErrorCode::basis, "custom basis: omega " + std::to_string(i) +
                                              " must have degree " + std::to_string(i));
        if (w.leading() != Rational(1))
            throw Error(ErrorCode::basis,
                        "custom basis: omega " + std::to_string(i) + " is not monic");
        omegas.push_back(std::move(w));
    }
    return std::make_shared<GeneralBasis>(BasisKind::custom, std::move(omegas));
}

std::optional<int> degree(const PolyInBasis& p) {
    for (int i = static_cast<int>(p.coeffs.size()) - 1; i >= 0; --i)
        if (!p.coeffs[static_cast<size_t>(i)].is_zero()) return i;
    return std::nullopt;
}

PolyInBasis trimmed(const PolyInBasis& p) {
    PolyInBasis out = p;
    while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
}

PolyInBasis scaled(const PolyInBasis& p, const Rational& factor) {
    PolyInBasis out = p;
    for (auto& c : out.coeffs) c *= factor;
    return trimmed(out);
}

TransitionMatrix transition_matrix(const GeneralBasis& basis, int dim) {
    if (dim < 1 || dim > basis.size() + 1)
        throw Error(ErrorCode::range, "transition matrix dimension out of range");
    RationalMatrix u(dim, dim);
    // Row r holds x^{dim-1-r} expanded in (omega_{dim-1}, ..., omega_0).
    for (int j = 0; j < dim; ++j) {
        Polynomial rem = Polynomial::monomial(j);
        while (!rem.is_zero()) {
            const int d = *rem.degree();
            const Rational c = rem.leading();
            u.at(dim - 1 - j, dim - 1 - d) = c;
            rem = rem - c * basis.omega(d);
        }
    }
    return TransitionMatrix{dim, std::move(u)};
}

Polynomial to_power(const PolyInBasis& p) {
    if (!p.basis) throw Error(ErrorCode::basis, "coefficient vector has no basis");
    if (static_cast<int>(p.coeffs.size()) > p.basis->size() + 1)
        throw Error(ErrorCode::range, "coefficient vector longer than basis");
    Polynomial acc;
    for (size_t i = 0; i < p.coeffs.size(); ++i) {
        if (p.coeffs[i].is_zero()) continue;
        acc = acc + p.coeffs[i] * p.basis->omega(static_cast<int>(i));
    }
    return acc;
}

PolyInBasis from_power(const Polynomial& p, BasisPtr basis) {
    if (!basis) throw Error(ErrorCode::basis, "null basis");
    if (p.degree() > basis->size())
        throw Error(ErrorCode::range, "polynomial degree exceeds basis size");
    std::vector<Rational> coeffs;
    Polynomial rem = p;
    if (!rem.is_zero()) coeffs.assign(static_cast<size_t>(*rem.degree()) + 1, Rational(0));
    while (!rem.is_zero()) {
        const int d = *rem.degree();
        const Rational c = rem.leading();
        coeffs[static_cast<size_t>(d)] = c;
        rem = rem - c * basis->omega(d);
    }
    return trimmed(PolyInBasis{std::move(basis), std::move(coeffs)});
}

}  // namespace bezsub
