#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace hhl {

using BigInt = mpz_class;

/// Sparse polynomial in q and t with unbounded integer coefficients.
/// Zero coefficients are never stored, so equality of term maps is equality
/// of polynomials. Terms iterate by ascending q-exponent, then t-exponent.
class QTPolynomial {
public:
    using Exponents = std::pair<int, int>;  // (q, t)
    using Terms = std::map<Exponents, BigInt>;

    QTPolynomial() = default;

    static QTPolynomial constant(const BigInt& c) { return monomial(0, 0, c); }
    static QTPolynomial monomial(int q_exp, int t_exp, const BigInt& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(int q_exp, int t_exp) const;

    /// Adds c*q^a*t^b in place, dropping the term if it cancels.
    void add_term(int q_exp, int t_exp, const BigInt& c);

    QTPolynomial& operator+=(const QTPolynomial& other);
    QTPolynomial& operator-=(const QTPolynomial& other);
    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
    friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
    QTPolynomial operator-() const;

    friend bool operator==(const QTPolynomial& a, const QTPolynomial& b) { return a.terms_ == b.terms_; }

    /// p(t, q): exchanges the roles of the two variables.
    QTPolynomial swapped_variables() const;
    /// Value at q = t = 1.
    BigInt value_at_one() const;

private:
    Terms terms_;
};

// Exact ring operations, named as in the rest of the toolkit.
inline QTPolynomial qt_add(const QTPolynomial& p, const QTPolynomial& r) { return p + r; }
inline QTPolynomial qt_mul(const QTPolynomial& p, const QTPolynomial& r) { return p * r; }
inline bool qt_equal(const QTPolynomial& p, const QTPolynomial& r) { return p == r; }

/// "1 + q + 2*q^2*t - t^3"; "0" for the zero polynomial.
std::string to_string(const QTPolynomial& p);

}  // namespace hhl
