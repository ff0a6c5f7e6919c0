#pragma once

#include <span>
#include <string>
#include <vector>

#include "hhl/partition.hpp"

namespace hhl {

/// A shape together with one positive integer per cell. No ordering
/// constraints are imposed on the entries.
///
/// Entries are stored row by row starting from the bottom row.
class Filling {
public:
    Filling() = default;
    /// `rows_bottom_up[r]` holds row r+1; lengths must match the shape.
    Filling(Partition shape, const std::vector<std::vector<int>>& rows_bottom_up);

    /// Rows listed top row first, as a tableau is usually drawn.
    static Filling from_top_down(const std::vector<std::vector<int>>& rows_top_down);
    /// Entries listed in reading order (top row first, left to right).
    static Filling from_reading_order(const Partition& shape, std::span<const int> entries);
    /// Every cell labelled `value`.
    static Filling constant(const Partition& shape, int value);

    const Partition& shape() const noexcept { return shape_; }
    int at(const Cell& c) const;
    int at(int row, int col) const { return at(Cell{row, col}); }

    void set(const Cell& c, int value);
    void swap_entries(const Cell& a, const Cell& b);

    std::vector<int> row(int r) const;
    std::vector<std::vector<int>> rows_top_down() const;
    std::vector<int> reading_word() const;
    int max_entry() const noexcept;

    auto operator<=>(const Filling&) const = default;

private:
    std::size_t index(const Cell& c) const;

    Partition shape_;
    std::vector<int> entries_;
    std::vector<std::size_t> row_offset_;
};

/// Rows top-down, ';' between rows and ',' between entries: "6,2;2,4,8;4,4,1,3".
std::string to_string(const Filling& t);

}  // namespace hhl
