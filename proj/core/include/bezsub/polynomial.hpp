#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bezsub/rational.hpp"

namespace bezsub {

/// Dense univariate polynomial over Rational in the power basis.
/// Coefficients are stored ascending (index i holds the x^i coefficient)
/// and trimmed: the highest stored coefficient is nonzero. The zero
/// polynomial is the empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational value);
    static Polynomial monomial(int degree, Rational coeff = Rational(1));

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial. std::optional's ordering
    /// (nullopt below every value) gives the usual deg 0 = -inf semantics,
    /// so e.g. `rem.degree() < divisor.degree()` is valid even at rem = 0.
    std::optional<int> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Leading coefficient; throws on the zero polynomial.
    const Rational& leading() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    /// Horner evaluation, exact.
    Rational eval(const Rational& t) const;

    Polynomial monic() const;

    /// Human-readable form, e.g. "x^3 - 2*x^2 + 1/2*x - 1"; "0" for zero.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Exact division with remainder: p = quot*q + rem, deg rem < deg q.
/// Throws Error{division} when q is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

/// Monic gcd via the Euclidean algorithm. Throws when both inputs are zero.
Polynomial gcd_euclid(const Polynomial& p, const Polynomial& q);

}  // namespace bezsub
