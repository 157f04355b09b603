#include "bezsub/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bezsub/error.hpp"

namespace bezsub {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Rational value) {
    if (value.is_zero()) return Polynomial();
    return Polynomial({std::move(value)});
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
    if (degree < 0) throw Error(ErrorCode::range, "monomial with negative degree");
    if (coeff.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::range, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> out;
    out.reserve(p.coeffs_.size());
    for (const auto& a : p.coeffs_) out.push_back(c * a);
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return Polynomial();
    return leading().inverse() * *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw Error(ErrorCode::division, "polynomial division by zero");
    const int dq = *q.degree();
    std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
    std::vector<Rational> quot;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= dq) quot.assign(static_cast<size_t>(dr - dq) + 1, Rational(0));
    const Rational lead_inv = q.leading().inverse();
    while (dr >= dq) {
        Rational factor = rem[static_cast<size_t>(dr)] * lead_inv;
        if (!factor.is_zero()) {
            quot[static_cast<size_t>(dr - dq)] = factor;
            for (int i = 0; i <= dq; ++i)
                rem[static_cast<size_t>(dr - dq + i)] -= factor * q.coeff(i);
        }
        --dr;
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd_euclid(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero())
        throw Error(ErrorCode::range, "gcd of two zero polynomials");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = divmod(a, b);
        (void)quot;
        a = std::move(b);
        b = std::move(rem);
    }
    return a.monic();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace bezsub
