#include "hhl/monomial_expansion.hpp"

#include <map>

namespace hhl {

CyclotomicExpansion specialize_expansion(const QTExpansion& h, int l) {
    CyclotomicExpansion out(h.nvars(), l);
    for (const auto& [nu, c] : h.coefficients()) out.add(nu, specialize_t(c, l));
    return out;
}

QTExpansion swap_qt(const QTExpansion& h) {
    QTExpansion out(h.nvars());
    for (const auto& [nu, c] : h.coefficients()) out.add(nu, c.swapped_variables());
    return out;
}

namespace detail {

std::size_t orbit_size(std::vector<int> entries) {
    std::map<int, int> multiplicity;
    for (int e : entries) ++multiplicity[e];
    // n! / prod(k_i!) built incrementally as a product of binomials to stay exact.
    std::size_t result = 1;
    std::size_t placed = 0;
    for (const auto& [value, k] : multiplicity) {
        for (int i = 1; i <= k; ++i) {
            ++placed;
            result = result * placed / static_cast<std::size_t>(i);
        }
    }
    return result;
}

}  // namespace detail

}  // namespace hhl
