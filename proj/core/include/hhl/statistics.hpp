#pragma once

#include <span>
#include <vector>

#include "hhl/filling.hpp"
#include "hhl/partition.hpp"

namespace hhl {

// Shape geometry. Both throw InvalidCellError when `c` is outside `shape`.
int arm(const Partition& shape, const Cell& c);
int leg(const Partition& shape, const Cell& c);

/// Rows from the top row down to row 1, left to right within each row.
std::vector<Cell> reading_order(const Partition& shape);

/// Same-row attacking pairs of row `i`: ((i,j),(i,k)) with j < k.
std::vector<CellPair> att_same_row(const Partition& shape, int i);

/// Attacking pairs between row `i` and row `i-1`, recorded as (upper, lower)
/// with the upper cell strictly to the right: ((i,k),(i-1,j)) with j < k <= shape_i.
std::vector<CellPair> att_row_below(const Partition& shape, int i);

/// Cells (i+1,j) whose entry is strictly larger than the entry below.
std::vector<Cell> descents(const Filling& t);
/// Descents lying in row `i` (2 <= i <= length).
std::vector<Cell> des_rows(const Filling& t, int i);

int maj(const Filling& t);
int maj_rows(const Filling& t, int i);
int arm_rows(const Filling& t, int i);

struct RowInversions {
    std::vector<CellPair> same_row;   // subset of att_same_row
    std::vector<CellPair> row_below;  // subset of att_row_below, empty for i = 1
};

/// Inversions coming from row `i`: attacking pairs (b,c) with T_b > T_c, where
/// b is the cell earlier in reading order.
RowInversions inv_sets(const Filling& t, int i);

/// |Inv_i| + |Inv_{i,i-1}| - arm_{i,i-1}. May in principle be negative.
int inv_rows(const Filling& t, int i);

/// Number of attacking pairs whose earlier-in-reading-order entry is strictly
/// larger, counted directly over all pairs of cells.
int inversion_count(const Filling& t);

/// inv computed by the row decomposition |Inv_1| + sum_i inv_{i,i-1}.
/// Debug builds also evaluate the global definition and assert agreement.
int inv(const Filling& t);
/// inv computed globally: inversion_count - sum of arms over descents.
int inv_global(const Filling& t);

/// Length-m vector whose i-th entry counts cells labelled i.
/// Throws InvalidFillingError if an entry exceeds m.
Composition evaluation(const Filling& t, int m);

struct FillingStatistics {
    int inv = 0;
    int maj = 0;

    auto operator<=>(const FillingStatistics&) const = default;
};

FillingStatistics statistics(const Filling& t);

/// Precompiled statistic evaluator for a fixed shape. Works on reading words
/// (entries listed in reading order) so enumeration loops never build Filling
/// objects. Results agree with `inv` and `maj` above.
class StatisticsPlan {
public:
    explicit StatisticsPlan(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    std::size_t cell_count() const noexcept { return static_cast<std::size_t>(shape_.size()); }

    FillingStatistics evaluate(std::span<const int> reading_word) const noexcept;

    // Bounds on the statistics over all fillings of the shape.
    int max_maj() const noexcept { return max_maj_; }
    int min_inv() const noexcept { return -total_arm_; }
    int max_inv() const noexcept { return static_cast<int>(pairs_.size()); }

private:
    struct DescentSlot {
        std::size_t upper;
        std::size_t lower;
        int weight;  // leg + 1
        int arm;
    };
    struct PairSlot {
        std::size_t earlier;
        std::size_t later;
    };

    Partition shape_;
    std::vector<DescentSlot> descents_;
    std::vector<PairSlot> pairs_;
    int max_maj_ = 0;
    int total_arm_ = 0;
};

}  // namespace hhl
