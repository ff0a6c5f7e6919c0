#include "hhl/enumeration.hpp"

#include <limits>

#include "hhl/error.hpp"

namespace hhl {

std::uint64_t filling_count(int cells, int m) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 1;
    for (int i = 0; i < cells; ++i) {
        if (m != 0 && count > cap / static_cast<std::uint64_t>(m)) return cap;
        count *= static_cast<std::uint64_t>(m);
    }
    return count;
}

void require_budget(const Partition& shape, const EnumerationBudget& budget) {
    if (budget.m < 1) throw InvalidArgumentError("alphabet size m must be >= 1");
    const std::uint64_t count = filling_count(shape.size(), budget.m);
    if (count > budget.max_states) {
        throw BudgetExceededError("enumeration of " + std::to_string(budget.m) + "^" +
                                  std::to_string(shape.size()) + " = " + std::to_string(count) +
                                  " fillings of (" + to_string(shape) + ") exceeds max_states " +
                                  std::to_string(budget.max_states));
    }
}

FillingOdometer::FillingOdometer(const Partition& shape, int m, std::span<const int> prefix)
    : shape_(shape), m_(m), pinned_(prefix.size()), word_(static_cast<std::size_t>(shape.size()), 1) {
    if (m < 1) throw InvalidArgumentError("alphabet size m must be >= 1");
    if (prefix.size() > word_.size()) throw InvalidArgumentError("odometer prefix longer than shape");
    std::copy(prefix.begin(), prefix.end(), word_.begin());
}

bool FillingOdometer::next() noexcept {
    for (std::size_t i = word_.size(); i-- > pinned_;) {
        if (word_[i] < m_) {
            ++word_[i];
            return true;
        }
        word_[i] = 1;
    }
    return false;
}

MultisetFillingEnumerator::MultisetFillingEnumerator(const Partition& shape, const Composition& nu)
    : shape_(shape) {
    if (nu.size() != shape.size()) {
        throw ShapeMismatchError("evaluation (" + to_string(nu) + ") has size " + std::to_string(nu.size()) +
                                 ", shape (" + to_string(shape) + ") has " + std::to_string(shape.size()) +
                                 " cells");
    }
    for (std::size_t label = 0; label < nu.length(); ++label) {
        word_.insert(word_.end(), static_cast<std::size_t>(nu[label]), static_cast<int>(label) + 1);
    }
}

std::vector<Filling> enumerate_fillings(const Partition& shape, const EnumerationBudget& budget) {
    require_budget(shape, budget);
    std::vector<Filling> out;
    FillingOdometer odo(shape, budget.m);
    do {
        out.push_back(odo.filling());
    } while (odo.next());
    return out;
}

std::vector<Filling> enumerate_fillings_with_evaluation(const Partition& shape, const Composition& nu) {
    std::vector<Filling> out;
    MultisetFillingEnumerator it(shape, nu);
    do {
        out.push_back(it.filling());
    } while (it.next());
    return out;
}

unsigned resolve_workers(unsigned requested) noexcept {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace hhl
