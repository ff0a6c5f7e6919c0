#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "hhl/cyclotomic.hpp"
#include "hhl/error.hpp"
#include "hhl/partition.hpp"
#include "hhl/qt_polynomial.hpp"

namespace hhl {

// Ring tag of a coefficient: 0 for Z[q,t], l for Z[q] (x) Z[t]/Phi_l.
inline int ring_modulus(const QTPolynomial&) { return 0; }
inline int ring_modulus(const CyclotomicElement& e) { return e.l(); }

/// Symmetric polynomial in `nvars` variables stored in the monomial basis:
/// exponent vector (a composition of length nvars) -> coefficient.
/// Zero coefficients are pruned on insertion.
template <class Coeff>
class MonomialExpansion {
public:
    using Map = std::map<Composition, Coeff>;

    explicit MonomialExpansion(int nvars, int ring = 0) : nvars_(nvars), ring_(ring) {
        if (nvars < 1) throw InvalidArgumentError("number of variables must be >= 1");
    }

    int nvars() const noexcept { return nvars_; }
    int ring() const noexcept { return ring_; }
    const Map& coefficients() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t term_count() const noexcept { return coeffs_.size(); }

    const Coeff* find(const Composition& nu) const {
        auto it = coeffs_.find(nu);
        return it == coeffs_.end() ? nullptr : &it->second;
    }

    void add(const Composition& nu, const Coeff& c) {
        if (static_cast<int>(nu.length()) != nvars_) {
            throw InvalidArgumentError("exponent vector " + to_string(nu) + " has length " +
                                       std::to_string(nu.length()) + ", expected " + std::to_string(nvars_));
        }
        if (ring_modulus(c) != ring_) {
            throw RingMismatchError("coefficient ring does not match expansion ring");
        }
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(nu, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend bool operator==(const MonomialExpansion& a, const MonomialExpansion& b) {
        return a.nvars_ == b.nvars_ && a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    int nvars_;
    int ring_;
    Map coeffs_;
};

using QTExpansion = MonomialExpansion<QTPolynomial>;
using CyclotomicExpansion = MonomialExpansion<CyclotomicElement>;

/// Convolution over exponent vectors. Throws on mismatched variable count or ring.
template <class Coeff>
MonomialExpansion<Coeff> expansion_mul(const MonomialExpansion<Coeff>& a, const MonomialExpansion<Coeff>& b) {
    if (a.nvars() != b.nvars()) {
        throw InvalidArgumentError("expansions in " + std::to_string(a.nvars()) + " and " +
                                   std::to_string(b.nvars()) + " variables");
    }
    if (a.ring() != b.ring()) throw RingMismatchError("expansions over different coefficient rings");
    MonomialExpansion<Coeff> out(a.nvars(), a.ring());
    for (const auto& [nu_a, c_a] : a.coefficients()) {
        for (const auto& [nu_b, c_b] : b.coefficients()) out.add(nu_a + nu_b, c_a * c_b);
    }
    return out;
}

/// True iff both expansions have identical (zero-pruned) coefficient maps.
/// Expansions over different variable counts or rings compare unequal.
template <class Coeff>
bool expansion_equal(const MonomialExpansion<Coeff>& a, const MonomialExpansion<Coeff>& b) {
    return a == b;
}

/// Applies specialize_t to every coefficient and prunes zeros.
CyclotomicExpansion specialize_expansion(const QTExpansion& h, int l);

/// Exchanges q and t in every coefficient.
QTExpansion swap_qt(const QTExpansion& h);

namespace detail {

// Number of distinct rearrangements of `entries` (a multiset permutation count).
std::size_t orbit_size(std::vector<int> entries);

}  // namespace detail

/// Collapses a symmetric expansion to one coefficient per partition (the
/// exponent vector sorted decreasingly, zeros stripped). Throws
/// SymmetryViolationError naming two exponent vectors in the same orbit whose
/// coefficients differ (an absent vector counts as coefficient 0).
template <class Coeff>
std::map<Partition, Coeff> symmetry_canonicalize(const MonomialExpansion<Coeff>& a) {
    std::map<Partition, Coeff> out;
    std::map<Partition, std::pair<Composition, std::size_t>> seen;  // representative, members found
    for (const auto& [nu, c] : a.coefficients()) {
        const Partition lambda = nu.sorted_partition();
        auto it = out.find(lambda);
        if (it == out.end()) {
            out.emplace(lambda, c);
            seen.emplace(lambda, std::make_pair(nu, std::size_t{1}));
            continue;
        }
        if (!(it->second == c)) {
            throw SymmetryViolationError("coefficients of " + to_string(seen.at(lambda).first) + " and " +
                                         to_string(nu) + " differ");
        }
        ++seen.at(lambda).second;
    }
    for (const auto& [lambda, rep] : seen) {
        const auto& [representative, found] = rep;
        if (found == detail::orbit_size(representative.entries())) continue;
        // Locate an orbit member with zero coefficient for the report.
        std::vector<int> perm = representative.entries();
        std::sort(perm.begin(), perm.end());
        do {
            Composition candidate(perm);
            if (a.find(candidate) == nullptr) {
                throw SymmetryViolationError("coefficients of " + to_string(representative) + " and " +
                                             to_string(candidate) + " differ");
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace hhl
