#include "hhl/macdonald.hpp"

#include <set>
#include <string>
#include <unordered_map>

#include "hhl/error.hpp"
#include "hhl/statistics.hpp"

namespace hhl {

ShapeSpec::ShapeSpec(Partition mu_prime_in, int n_in, int l_in)
    : mu_prime(std::move(mu_prime_in)), n(n_in), l(l_in) {
    if (n < 1) throw InvalidArgumentError("tail width n must be >= 1");
    if (l < 0) throw InvalidArgumentError("tail height l must be >= 0");
    if (!mu_prime.empty() && mu_prime.parts().back() < n) {
        throw InvalidPartitionError("last part of mu' (" + std::to_string(mu_prime.parts().back()) +
                                    ") must be >= n (" + std::to_string(n) + ")");
    }
}

namespace {

// Per-evaluation tallies of (inv, maj), stored densely. Keys are the
// evaluation vector packed one byte per label.
class Tally {
public:
    Tally(int m, int min_inv, int max_inv, int max_maj)
        : m_(m), min_inv_(min_inv), maj_span_(max_maj + 1),
          cells_(static_cast<std::size_t>(max_inv - min_inv + 1) * static_cast<std::size_t>(max_maj + 1)),
          key_(static_cast<std::size_t>(m), '\0') {}

    void record(std::span<const int> word, FillingStatistics s) {
        std::fill(key_.begin(), key_.end(), '\0');
        for (int v : word) ++key_[static_cast<std::size_t>(v - 1)];
        auto it = counts_.find(key_);
        if (it == counts_.end()) it = counts_.emplace(key_, std::vector<std::uint64_t>(cells_, 0)).first;
        ++it->second[slot(s)];
    }

    void merge(Tally&& other) {
        for (auto& [key, vec] : other.counts_) {
            auto [it, inserted] = counts_.try_emplace(key, std::move(vec));
            if (!inserted) {
                for (std::size_t i = 0; i < cells_; ++i) it->second[i] += vec[i];
            }
        }
    }

    QTExpansion to_expansion(std::uint64_t& total) const {
        QTExpansion out(m_);
        total = 0;
        for (const auto& [key, vec] : counts_) {
            std::vector<int> nu;
            nu.reserve(key.size());
            for (char c : key) nu.push_back(static_cast<unsigned char>(c));
            QTPolynomial p;
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if (vec[i] == 0) continue;
                total += vec[i];
                const int inv_value = static_cast<int>(i / static_cast<std::size_t>(maj_span_)) + min_inv_;
                const int maj_value = static_cast<int>(i % static_cast<std::size_t>(maj_span_));
                if (inv_value < 0) throw InvalidArgumentError("negative inv encountered");
                p.add_term(inv_value, maj_value, BigInt(static_cast<unsigned long>(vec[i])));
            }
            out.add(Composition(std::move(nu)), p);
        }
        return out;
    }

private:
    std::size_t slot(FillingStatistics s) const noexcept {
        return static_cast<std::size_t>(s.inv - min_inv_) * static_cast<std::size_t>(maj_span_) +
               static_cast<std::size_t>(s.maj);
    }

    int m_;
    int min_inv_;
    int maj_span_;
    std::size_t cells_;
    std::string key_;
    std::unordered_map<std::string, std::vector<std::uint64_t>> counts_;
};

template <class Coeff>
std::set<Composition> key_union(const MonomialExpansion<Coeff>& a, const MonomialExpansion<Coeff>& b) {
    std::set<Composition> keys;
    for (const auto& [nu, c] : a.coefficients()) keys.insert(nu);
    for (const auto& [nu, c] : b.coefficients()) keys.insert(nu);
    return keys;
}

template <class Coeff>
std::vector<CoefficientMismatch> compare_expansions(const MonomialExpansion<Coeff>& lhs,
                                                    const MonomialExpansion<Coeff>& rhs,
                                                    const std::set<Composition>& keys, int ring) {
    std::vector<CoefficientMismatch> out;
    if (expansion_equal(lhs, rhs)) return out;
    const Coeff zero = [&] {
        if constexpr (std::is_same_v<Coeff, CyclotomicElement>) return CyclotomicElement(ring);
        else return QTPolynomial();
    }();
    for (const auto& nu : keys) {
        const Coeff* a = lhs.find(nu);
        const Coeff* b = rhs.find(nu);
        const Coeff& av = a ? *a : zero;
        const Coeff& bv = b ? *b : zero;
        if (!(av == bv)) out.push_back({nu, to_string(av), to_string(bv)});
    }
    return out;
}

}  // namespace

QTExpansion macdonald_polynomial(const Partition& shape, const EnumerationBudget& budget, unsigned workers) {
    require_budget(shape, budget);
    if (shape.size() > 255) throw InvalidArgumentError("shapes above 255 cells are not supported");
    const StatisticsPlan plan(shape);
    const int m = budget.m;
    const auto make = [&] { return Tally(m, plan.min_inv(), plan.max_inv(), plan.max_maj()); };
    const Tally tally = reduce_fillings<Tally>(shape, m, workers, make, [&](std::span<const int> word, Tally& acc) {
        acc.record(word, plan.evaluate(word));
    });
    std::uint64_t total = 0;
    QTExpansion out = tally.to_expansion(total);
    if (total != filling_count(shape.size(), m)) {
        throw InvalidArgumentError("filling tally " + std::to_string(total) + " does not match m^|shape|");
    }
    return out;
}

FactorizationReport check_factorization(const ShapeSpec& spec, const EnumerationBudget& budget, unsigned workers) {
    if (budget.m < 1) throw InvalidArgumentError("alphabet size m must be >= 1");
    if (spec.l < 1) throw InvalidArgumentError("factorization needs l >= 1");
    FactorizationReport report;
    report.mu = spec.mu();
    report.mu_prime = spec.mu_prime;
    report.tail = spec.tail();
    report.l = spec.l;
    report.m = budget.m;
    report.partial = budget.m < report.mu.size();

    for (const Partition* p : {&report.mu, &report.mu_prime, &report.tail}) require_budget(*p, budget);

    const auto lhs = specialize_expansion(macdonald_polynomial(report.mu, budget, workers), spec.l);
    const auto body = specialize_expansion(macdonald_polynomial(report.mu_prime, budget, workers), spec.l);
    const auto tail = specialize_expansion(macdonald_polynomial(report.tail, budget, workers), spec.l);
    const auto rhs = expansion_mul(body, tail);

    for (const Partition* p : {&report.mu, &report.mu_prime, &report.tail}) {
        report.fillings += filling_count(p->size(), budget.m);
    }
    const auto keys = key_union(lhs, rhs);
    report.compared = keys.size();
    report.mismatches = compare_expansions(lhs, rhs, keys, spec.l);
    return report;
}

SymmetryReport check_conjugation_symmetry(const Partition& shape, const EnumerationBudget& budget, unsigned workers) {
    SymmetryReport report;
    report.shape = shape;
    report.conjugate = shape.conjugate();
    report.m = budget.m;
    require_budget(shape, budget);
    require_budget(report.conjugate, budget);
    const auto lhs = macdonald_polynomial(shape, budget, workers);
    const auto rhs = swap_qt(macdonald_polynomial(report.conjugate, budget, workers));
    report.fillings = 2 * filling_count(shape.size(), budget.m);
    const auto keys = key_union(lhs, rhs);
    report.compared = keys.size();
    report.mismatches = compare_expansions(lhs, rhs, keys, 0);
    return report;
}

BigInt multinomial(const Composition& nu) {
    BigInt result = 1;
    unsigned long placed = 0;
    for (int part : nu.entries()) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), placed + static_cast<unsigned long>(part), static_cast<unsigned long>(part));
        result *= binom;
        placed += static_cast<unsigned long>(part);
    }
    return result;
}

SymmetryReport check_unit_specialization(const Partition& shape, const EnumerationBudget& budget, unsigned workers) {
    SymmetryReport report;
    report.shape = shape;
    report.conjugate = shape.conjugate();
    report.m = budget.m;
    const auto h = macdonald_polynomial(shape, budget, workers);
    report.fillings = filling_count(shape.size(), budget.m);

    // Expected side: every composition of |shape| into m parts.
    QTExpansion expected(budget.m);
    std::vector<int> nu(static_cast<std::size_t>(budget.m), 0);
    auto fill_rec = [&](auto&& self, std::size_t index, int remaining) -> void {
        if (index + 1 == nu.size()) {
            nu[index] = remaining;
            Composition c(nu);
            expected.add(c, QTPolynomial::constant(multinomial(c)));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            nu[index] = v;
            self(self, index + 1, remaining - v);
        }
    };
    fill_rec(fill_rec, 0, shape.size());

    QTExpansion at_one(budget.m);
    for (const auto& [c, p] : h.coefficients()) at_one.add(c, QTPolynomial::constant(p.value_at_one()));
    const auto keys = key_union(at_one, expected);
    report.compared = keys.size();
    report.mismatches = compare_expansions(at_one, expected, keys, 0);
    return report;
}

}  // namespace hhl
