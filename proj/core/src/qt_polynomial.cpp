#include "hhl/qt_polynomial.hpp"

#include "hhl/error.hpp"

namespace hhl {

QTPolynomial QTPolynomial::monomial(int q_exp, int t_exp, const BigInt& c) {
    QTPolynomial p;
    p.add_term(q_exp, t_exp, c);
    return p;
}

BigInt QTPolynomial::coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void QTPolynomial::add_term(int q_exp, int t_exp, const BigInt& c) {
    if (q_exp < 0 || t_exp < 0) throw InvalidArgumentError("negative exponent in QTPolynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
    return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    }
    return out;
}

QTPolynomial QTPolynomial::operator-() const {
    QTPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

QTPolynomial QTPolynomial::swapped_variables() const {
    QTPolynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
    return out;
}

BigInt QTPolynomial::value_at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

namespace {

std::string render_monomial(const BigInt& magnitude, int q_exp, int t_exp) {
    std::string out;
    auto append = [&](const std::string& factor) {
        if (!out.empty()) out += '*';
        out += factor;
    };
    if (magnitude != 1 || (q_exp == 0 && t_exp == 0)) out = magnitude.get_str();
    if (q_exp > 0) append(q_exp == 1 ? "q" : "q^" + std::to_string(q_exp));
    if (t_exp > 0) append(t_exp == 1 ? "t" : "t^" + std::to_string(t_exp));
    return out;
}

}  // namespace

std::string to_string(const QTPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += render_monomial(magnitude, e.first, e.second);
    }
    return out;
}

}  // namespace hhl
