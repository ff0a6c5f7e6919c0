#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace hhl {

/// A box of a Young diagram in French convention: row 1 is the bottom row,
/// column 1 the leftmost column. Both coordinates are 1-based.
struct Cell {
    int row = 1;
    int col = 1;

    auto operator<=>(const Cell&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);
std::string to_string(const Cell& c);

/// Ordered pair of cells produced by one of the attacking-pair sets.
struct CellPair {
    Cell first;
    Cell second;

    auto operator<=>(const CellPair&) const = default;
};

/// Weakly decreasing sequence of positive parts. The empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Width of row `row` (1-based); 0 outside 1..length().
    int row_length(int row) const noexcept;
    /// Number of cells in column `col` (1-based).
    int column_height(int col) const noexcept;

    bool contains(const Cell& c) const noexcept;
    Partition conjugate() const;

    /// Parts of `*this` followed by `count` copies of `width`.
    Partition with_rows_appended(int width, int count) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
/// Comma-joined parts, "" for the empty partition.
std::string to_string(const Partition& p);

/// All partitions of `n`, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Sequence of non-negative integers; doubles as filling evaluation and as
/// monomial exponent vector.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);
    Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    int size() const noexcept;
    int operator[](std::size_t i) const { return entries_[i]; }

    /// Entries sorted decreasingly with zeros removed.
    Partition sorted_partition() const;
    /// Componentwise sum; lengths must agree.
    Composition operator+(const Composition& other) const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);
std::string to_string(const Composition& c);

}  // namespace hhl
