#include "hhl/cyclotomic.hpp"

#include <mutex>

#include "hhl/error.hpp"

namespace hhl {

namespace {

void trim(IntPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient a / b for monic b dividing a.
IntPolynomial poly_divexact_monic(IntPolynomial a, const IntPolynomial& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    IntPolynomial quotient(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const BigInt c = a[i];
        if (c == 0) continue;
        quotient[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw InvalidArgumentError("inexact polynomial division");
    return quotient;
}

std::shared_ptr<const CyclotomicPolynomial> cached_cyclotomic(int l) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicPolynomial>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(l); it != cache.end()) return it->second;
    }
    auto phi = std::make_shared<const CyclotomicPolynomial>(cyclotomic(l));
    std::lock_guard lock(mutex);
    return cache.try_emplace(l, std::move(phi)).first->second;
}

}  // namespace

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    IntPolynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

IntPolynomial poly_mod_monic(IntPolynomial a, const IntPolynomial& monic) {
    const std::size_t d = monic.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        const BigInt c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * monic[j];
    }
    a.resize(std::min(a.size(), d));
    return a;
}

CyclotomicPolynomial cyclotomic(int l) {
    if (l < 1) throw InvalidArgumentError("cyclotomic index must be >= 1");
    IntPolynomial value(static_cast<std::size_t>(l) + 1, 0);
    value.front() = -1;
    value.back() = 1;
    for (int d = 1; d < l; ++d) {
        if (l % d == 0) value = poly_divexact_monic(std::move(value), cyclotomic(d).coeffs);
    }
    return {l, std::move(value)};
}

CyclotomicElement::CyclotomicElement(int l) : l_(l), modulus_(cached_cyclotomic(l)) {}

void CyclotomicElement::add(int q_exp, const IntPolynomial& t_poly) {
    IntPolynomial reduced = poly_mod_monic(t_poly, modulus_->coeffs);
    reduced.resize(static_cast<std::size_t>(phi()), 0);
    auto [it, inserted] = rep_.try_emplace(q_exp, std::move(reduced));
    if (!inserted) {
        for (std::size_t j = 0; j < it->second.size(); ++j) {
            it->second[j] += reduced[j];
        }
    }
    bool zero = true;
    for (const auto& c : it->second) zero = zero && c == 0;
    if (zero) rep_.erase(it);
}

void CyclotomicElement::require_same_ring(const CyclotomicElement& other) const {
    if (other.l_ != l_) {
        throw RingMismatchError("cyclotomic elements specialized at l=" + std::to_string(l_) +
                                " and l=" + std::to_string(other.l_));
    }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
    require_same_ring(other);
    for (const auto& [e, coeffs] : other.rep_) add(e, coeffs);
    return *this;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    a.require_same_ring(b);
    CyclotomicElement out(a.l_);
    for (const auto& [ea, ca] : a.rep_) {
        for (const auto& [eb, cb] : b.rep_) out.add(ea + eb, poly_mul(ca, cb));
    }
    return out;
}

QTPolynomial CyclotomicElement::as_qt_polynomial() const {
    QTPolynomial p;
    for (const auto& [e, coeffs] : rep_) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) p.add_term(e, static_cast<int>(j), coeffs[j]);
    }
    return p;
}

CyclotomicElement specialize_t(const QTPolynomial& p, int l) {
    if (l < 1) throw InvalidArgumentError("root-of-unity order must be >= 1");
    CyclotomicElement out(l);
    // t^l == 1 modulo Phi_l, so exponents only matter modulo l.
    for (const auto& [e, c] : p.terms()) {
        IntPolynomial monomial(static_cast<std::size_t>(e.second % l) + 1, 0);
        monomial.back() = c;
        out.add(e.first, monomial);
    }
    return out;
}

std::string to_string(const CyclotomicElement& e) {
    return to_string(e.as_qt_polynomial()) + " (mod Phi_" + std::to_string(e.l()) + ")";
}

}  // namespace hhl
