#pragma once

#include <cstdint>
#include <vector>

#include "hhl/enumeration.hpp"
#include "hhl/monomial_expansion.hpp"
#include "hhl/partition.hpp"

namespace hhl {

/// A partition with a tail: mu = (mu_prime, n^l), the tail rows stacked on
/// top of mu_prime. Requires n >= 1, l >= 0, and mu_prime's last part >= n.
struct ShapeSpec {
    Partition mu_prime;
    int n = 1;
    int l = 0;

    ShapeSpec(Partition mu_prime, int n, int l);

    Partition mu() const { return mu_prime.with_rows_appended(n, l); }
    Partition tail() const { return Partition().with_rows_appended(n, l); }
};

/// Modified Macdonald polynomial in `budget.m` variables as the generating
/// function of q^inv t^maj over all fillings with entries <= m, accumulated
/// in a single streaming pass (no list of fillings is materialized).
QTExpansion macdonald_polynomial(const Partition& shape, const EnumerationBudget& budget, unsigned workers = 0);

struct CoefficientMismatch {
    Composition nu;
    std::string lhs;
    std::string rhs;
};

struct FactorizationReport {
    Partition mu;
    Partition mu_prime;
    Partition tail;
    int l = 0;
    int m = 0;
    bool partial = false;              // m < |mu|
    std::uint64_t fillings = 0;        // fillings enumerated over the three shapes
    std::size_t compared = 0;          // exponent vectors compared
    std::vector<CoefficientMismatch> mismatches;

    bool verified() const noexcept { return mismatches.empty(); }
};

/// Compares H_mu(X;q,zeta_l) with H_{mu'}(X;q,zeta_l) * H_{(n^l)}(X;q,zeta_l)
/// coefficient by coefficient in m variables. Requires l >= 1.
FactorizationReport check_factorization(const ShapeSpec& spec, const EnumerationBudget& budget,
                                        unsigned workers = 0);

struct SymmetryReport {
    Partition shape;
    Partition conjugate;
    int m = 0;
    std::uint64_t fillings = 0;
    std::size_t compared = 0;
    std::vector<CoefficientMismatch> mismatches;

    bool verified() const noexcept { return mismatches.empty(); }
};

/// H_shape(q,t) against H_conjugate(t,q), coefficient-wise.
SymmetryReport check_conjugation_symmetry(const Partition& shape, const EnumerationBudget& budget,
                                          unsigned workers = 0);

/// At q = t = 1 each coefficient must equal the multinomial |shape|! / prod nu_i!,
/// i.e. the expansion of (x_1 + ... + x_m)^|shape|.
SymmetryReport check_unit_specialization(const Partition& shape, const EnumerationBudget& budget,
                                         unsigned workers = 0);

/// |shape|! / prod nu_i! for an exponent vector of size |shape|.
BigInt multinomial(const Composition& nu);

}  // namespace hhl
