#include "hhl/filling.hpp"

#include <algorithm>

#include "hhl/error.hpp"

namespace hhl {

namespace {

std::vector<std::size_t> offsets_for(const Partition& shape) {
    std::vector<std::size_t> off;
    off.reserve(static_cast<std::size_t>(shape.length()) + 1);
    std::size_t acc = 0;
    for (int p : shape.parts()) {
        off.push_back(acc);
        acc += static_cast<std::size_t>(p);
    }
    off.push_back(acc);
    return off;
}

}  // namespace

Filling::Filling(Partition shape, const std::vector<std::vector<int>>& rows_bottom_up)
    : shape_(std::move(shape)), row_offset_(offsets_for(shape_)) {
    if (static_cast<int>(rows_bottom_up.size()) != shape_.length()) {
        throw ShapeMismatchError("filling has " + std::to_string(rows_bottom_up.size()) +
                                 " rows, shape has " + std::to_string(shape_.length()));
    }
    entries_.reserve(static_cast<std::size_t>(shape_.size()));
    for (int r = 1; r <= shape_.length(); ++r) {
        const auto& row = rows_bottom_up[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) != shape_.row_length(r)) {
            throw ShapeMismatchError("row " + std::to_string(r) + " has " +
                                     std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(shape_.row_length(r)));
        }
        for (int v : row) {
            if (v < 1) throw InvalidFillingError("filling entries must be positive");
            entries_.push_back(v);
        }
    }
}

Filling Filling::from_top_down(const std::vector<std::vector<int>>& rows_top_down) {
    std::vector<std::vector<int>> bottom_up(rows_top_down.rbegin(), rows_top_down.rend());
    std::vector<int> parts;
    parts.reserve(bottom_up.size());
    for (const auto& r : bottom_up) parts.push_back(static_cast<int>(r.size()));
    return Filling(Partition(std::move(parts)), bottom_up);
}

Filling Filling::from_reading_order(const Partition& shape, std::span<const int> entries) {
    if (static_cast<int>(entries.size()) != shape.size()) {
        throw ShapeMismatchError("reading word length does not match shape size");
    }
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    std::size_t pos = 0;
    for (int r = shape.length(); r >= 1; --r) {
        auto& row = rows[static_cast<std::size_t>(r - 1)];
        row.assign(entries.begin() + static_cast<std::ptrdiff_t>(pos),
                   entries.begin() + static_cast<std::ptrdiff_t>(pos) + shape.row_length(r));
        pos += static_cast<std::size_t>(shape.row_length(r));
    }
    return Filling(shape, rows);
}

Filling Filling::constant(const Partition& shape, int value) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), value);
    return Filling(shape, rows);
}

std::size_t Filling::index(const Cell& c) const {
    if (!shape_.contains(c)) {
        throw InvalidCellError("cell " + to_string(c) + " is not in shape (" +
                               hhl::to_string(shape_) + ")");
    }
    return row_offset_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
}

int Filling::at(const Cell& c) const { return entries_[index(c)]; }

void Filling::set(const Cell& c, int value) {
    if (value < 1) throw InvalidFillingError("filling entries must be positive");
    entries_[index(c)] = value;
}

void Filling::swap_entries(const Cell& a, const Cell& b) {
    std::swap(entries_[index(a)], entries_[index(b)]);
}

std::vector<int> Filling::row(int r) const {
    if (r < 1 || r > shape_.length()) {
        throw RowRangeError("row " + std::to_string(r) + " out of range");
    }
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(row_offset_[static_cast<std::size_t>(r - 1)]);
    return {first, first + shape_.row_length(r)};
}

std::vector<std::vector<int>> Filling::rows_top_down() const {
    std::vector<std::vector<int>> out;
    for (int r = shape_.length(); r >= 1; --r) out.push_back(row(r));
    return out;
}

std::vector<int> Filling::reading_word() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (int r = shape_.length(); r >= 1; --r) {
        const auto rw = row(r);
        out.insert(out.end(), rw.begin(), rw.end());
    }
    return out;
}

int Filling::max_entry() const noexcept {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::string to_string(const Filling& t) {
    std::string out;
    bool first_row = true;
    for (const auto& row : t.rows_top_down()) {
        if (!first_row) out += ';';
        first_row = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(row[j]);
        }
    }
    return out;
}

}  // namespace hhl
