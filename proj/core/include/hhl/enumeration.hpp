#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "hhl/filling.hpp"
#include "hhl/partition.hpp"

namespace hhl {

inline constexpr std::uint64_t kDefaultMaxStates = 20'000'000;

/// Alphabet size plus a cap on m^|shape|; enumeration refuses to start above it.
struct EnumerationBudget {
    int m = 1;
    std::uint64_t max_states = kDefaultMaxStates;
};

/// m^cells, saturating at UINT64_MAX.
std::uint64_t filling_count(int cells, int m);

/// Throws BudgetExceededError (naming the count) if m^|shape| > max_states,
/// InvalidArgumentError if m < 1.
void require_budget(const Partition& shape, const EnumerationBudget& budget);

/// Walks every filling of `shape` with entries in 1..m as an odometer over
/// reading-order cells: the last reading cell turns fastest. The first
/// `prefix.size()` cells can be pinned to split the space into disjoint ranges.
class FillingOdometer {
public:
    FillingOdometer(const Partition& shape, int m, std::span<const int> prefix = {});

    std::span<const int> word() const noexcept { return word_; }
    Filling filling() const { return Filling::from_reading_order(shape_, word_); }
    /// Advances; returns false once every filling has been visited.
    bool next() noexcept;

private:
    Partition shape_;
    int m_;
    std::size_t pinned_;
    std::vector<int> word_;
};

/// Walks every filling with evaluation `nu` exactly once by permuting the
/// multiset of labels over the reading order (lexicographic order of words).
class MultisetFillingEnumerator {
public:
    MultisetFillingEnumerator(const Partition& shape, const Composition& nu);

    std::span<const int> word() const noexcept { return word_; }
    Filling filling() const { return Filling::from_reading_order(shape_, word_); }
    bool next() noexcept { return std::next_permutation(word_.begin(), word_.end()); }

private:
    Partition shape_;
    std::vector<int> word_;
};

/// Every filling of `shape` with entries <= m, in odometer order.
std::vector<Filling> enumerate_fillings(const Partition& shape, const EnumerationBudget& budget);
/// Every filling with evaluation `nu`. Throws ShapeMismatchError if |nu| != |shape|.
std::vector<Filling> enumerate_fillings_with_evaluation(const Partition& shape, const Composition& nu);

/// Resolves a worker request: 0 means hardware concurrency.
unsigned resolve_workers(unsigned requested) noexcept;

/// Deterministic parallel map-reduce over all fillings of `shape` with entries
/// in 1..m. The space is split by the values of the first two reading-order
/// cells; each range folds into its own `Acc` via `visit(word, acc)` and the
/// per-range accumulators are merged in range order with `Acc::merge`, so the
/// result does not depend on `workers`. The caller checks the budget.
template <class Acc, class MakeAcc, class Visit>
Acc reduce_fillings(const Partition& shape, int m, unsigned workers, MakeAcc make_acc, Visit visit) {
    const std::size_t cells = static_cast<std::size_t>(shape.size());
    const std::size_t prefix_len = std::min<std::size_t>(2, cells);
    std::size_t tasks = 1;
    for (std::size_t i = 0; i < prefix_len; ++i) tasks *= static_cast<std::size_t>(m);

    std::vector<Acc> partial;
    partial.reserve(tasks);
    for (std::size_t i = 0; i < tasks; ++i) partial.push_back(make_acc());

    auto run_task = [&](std::size_t task) {
        std::vector<int> prefix(prefix_len);
        std::size_t code = task;
        for (std::size_t i = prefix_len; i-- > 0;) {
            prefix[i] = static_cast<int>(code % static_cast<std::size_t>(m)) + 1;
            code /= static_cast<std::size_t>(m);
        }
        FillingOdometer odo(shape, m, prefix);
        Acc& acc = partial[task];
        do {
            visit(odo.word(), acc);
        } while (odo.next());
    };

    const unsigned nthreads = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(tasks));
    if (nthreads <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next_task{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned w = 0; w < nthreads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t; (t = next_task.fetch_add(1)) < tasks;) {
                    try {
                        run_task(t);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    Acc result = make_acc();
    for (auto& p : partial) result.merge(std::move(p));
    return result;
}

}  // namespace hhl
