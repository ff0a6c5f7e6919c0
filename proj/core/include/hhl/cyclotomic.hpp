#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hhl/qt_polynomial.hpp"

namespace hhl {

/// Dense univariate integer polynomial in t, lowest degree first.
using IntPolynomial = std::vector<BigInt>;

/// The l-th cyclotomic polynomial Phi_l(t); monic of degree phi(l).
struct CyclotomicPolynomial {
    int l = 1;
    IntPolynomial coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Phi_l, obtained by exact division of t^l - 1 by Phi_d for every proper divisor d.
/// Throws InvalidArgumentError for l < 1.
CyclotomicPolynomial cyclotomic(int l);

/// Product of polynomials (helper exposed for tests and the identity checks).
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
/// Remainder of `a` modulo a monic polynomial.
IntPolynomial poly_mod_monic(IntPolynomial a, const IntPolynomial& monic);

/// Polynomial in q whose coefficients live in Z[t]/Phi_l(t); this is the value
/// of a QTPolynomial at t = a primitive l-th root of unity. Every stored
/// coefficient vector has length phi(l) and is non-zero.
class CyclotomicElement {
public:
    using Rep = std::map<int, IntPolynomial>;  // q-exponent -> reduced t-coefficients

    explicit CyclotomicElement(int l = 1);

    int l() const noexcept { return l_; }
    int phi() const noexcept { return modulus_->degree(); }
    const Rep& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.empty(); }

    /// Adds c * q^q_exp * (t-polynomial), reducing modulo Phi_l.
    void add(int q_exp, const IntPolynomial& t_poly);

    CyclotomicElement& operator+=(const CyclotomicElement& other);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.l_ == b.l_ && a.rep_ == b.rep_;
    }

    /// The same element viewed as a QTPolynomial with t-degrees below phi(l).
    QTPolynomial as_qt_polynomial() const;

private:
    void require_same_ring(const CyclotomicElement& other) const;

    int l_;
    std::shared_ptr<const CyclotomicPolynomial> modulus_;
    Rep rep_;
};

/// Reduces every power of t modulo Phi_l; q-exponents untouched.
CyclotomicElement specialize_t(const QTPolynomial& p, int l);

/// "1 + q + t (mod Phi_3)"; "0 (mod Phi_l)" for zero.
std::string to_string(const CyclotomicElement& e);

}  // namespace hhl
