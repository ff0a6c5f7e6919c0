#include "hhl/statistics.hpp"

#include <cassert>

#include "hhl/error.hpp"

namespace hhl {

namespace {

void require_cell(const Partition& shape, const Cell& c) {
    if (!shape.contains(c)) {
        throw InvalidCellError("cell " + to_string(c) + " is not in shape (" + to_string(shape) + ")");
    }
}

void require_row(const Partition& shape, int i, int lowest) {
    if (i < lowest || i > shape.length()) {
        throw RowRangeError("row " + std::to_string(i) + " out of range [" + std::to_string(lowest) +
                            "," + std::to_string(shape.length()) + "]");
    }
}

// Reading-order position of every cell, indexed [row-1][col-1].
std::vector<std::vector<std::size_t>> reading_positions(const Partition& shape) {
    std::vector<std::vector<std::size_t>> pos(static_cast<std::size_t>(shape.length()));
    std::size_t next = 0;
    for (int r = shape.length(); r >= 1; --r) {
        auto& row = pos[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= shape.row_length(r); ++c) row.push_back(next++);
    }
    return pos;
}

bool attacking(const Cell& u, const Cell& v) {
    if (u.row == v.row) return u.col != v.col;
    if (u.row == v.row + 1) return u.col > v.col;
    if (v.row == u.row + 1) return v.col > u.col;
    return false;
}

}  // namespace

int arm(const Partition& shape, const Cell& c) {
    require_cell(shape, c);
    return shape.row_length(c.row) - c.col;
}

int leg(const Partition& shape, const Cell& c) {
    require_cell(shape, c);
    return shape.column_height(c.col) - c.row;
}

std::vector<Cell> reading_order(const Partition& shape) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(shape.size()));
    for (int r = shape.length(); r >= 1; --r) {
        for (int c = 1; c <= shape.row_length(r); ++c) out.push_back({r, c});
    }
    return out;
}

std::vector<CellPair> att_same_row(const Partition& shape, int i) {
    require_row(shape, i, 1);
    std::vector<CellPair> out;
    const int w = shape.row_length(i);
    for (int j = 1; j <= w; ++j) {
        for (int k = j + 1; k <= w; ++k) out.push_back({{i, j}, {i, k}});
    }
    return out;
}

std::vector<CellPair> att_row_below(const Partition& shape, int i) {
    require_row(shape, i, 2);
    std::vector<CellPair> out;
    const int w = shape.row_length(i);
    for (int j = 1; j <= w; ++j) {
        for (int k = j + 1; k <= w; ++k) out.push_back({{i, k}, {i - 1, j}});
    }
    return out;
}

std::vector<Cell> descents(const Filling& t) {
    std::vector<Cell> out;
    const auto& shape = t.shape();
    for (int r = shape.length(); r >= 2; --r) {
        for (int c = 1; c <= shape.row_length(r); ++c) {
            if (t.at(r, c) > t.at(r - 1, c)) out.push_back({r, c});
        }
    }
    return out;
}

std::vector<Cell> des_rows(const Filling& t, int i) {
    require_row(t.shape(), i, 2);
    std::vector<Cell> out;
    for (int c = 1; c <= t.shape().row_length(i); ++c) {
        if (t.at(i, c) > t.at(i - 1, c)) out.push_back({i, c});
    }
    return out;
}

int maj(const Filling& t) {
    int total = 0;
    for (const Cell& u : descents(t)) total += leg(t.shape(), u) + 1;
    return total;
}

int maj_rows(const Filling& t, int i) {
    int total = 0;
    for (const Cell& b : des_rows(t, i)) total += 1 + leg(t.shape(), b);
    return total;
}

int arm_rows(const Filling& t, int i) {
    int total = 0;
    for (const Cell& b : des_rows(t, i)) total += arm(t.shape(), b);
    return total;
}

RowInversions inv_sets(const Filling& t, int i) {
    require_row(t.shape(), i, 1);
    RowInversions out;
    for (const auto& p : att_same_row(t.shape(), i)) {
        if (t.at(p.first) > t.at(p.second)) out.same_row.push_back(p);
    }
    if (i >= 2) {
        for (const auto& p : att_row_below(t.shape(), i)) {
            if (t.at(p.first) > t.at(p.second)) out.row_below.push_back(p);
        }
    }
    return out;
}

int inv_rows(const Filling& t, int i) {
    require_row(t.shape(), i, 2);
    const auto sets = inv_sets(t, i);
    return static_cast<int>(sets.same_row.size() + sets.row_below.size()) - arm_rows(t, i);
}

int inversion_count(const Filling& t) {
    const auto order = reading_order(t.shape());
    int count = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
        for (std::size_t q = p + 1; q < order.size(); ++q) {
            if (attacking(order[p], order[q]) && t.at(order[p]) > t.at(order[q])) ++count;
        }
    }
    return count;
}

int inv_global(const Filling& t) {
    int total_arm = 0;
    for (const Cell& u : descents(t)) total_arm += arm(t.shape(), u);
    return inversion_count(t) - total_arm;
}

int inv(const Filling& t) {
    if (t.shape().empty()) return 0;
    int total = static_cast<int>(inv_sets(t, 1).same_row.size());
    for (int i = 2; i <= t.shape().length(); ++i) total += inv_rows(t, i);
    assert(total == inv_global(t));
    return total;
}

Composition evaluation(const Filling& t, int m) {
    std::vector<int> counts(static_cast<std::size_t>(std::max(m, 0)), 0);
    for (int v : t.reading_word()) {
        if (v > m) {
            throw InvalidFillingError("entry " + std::to_string(v) + " exceeds alphabet size " +
                                      std::to_string(m));
        }
        ++counts[static_cast<std::size_t>(v - 1)];
    }
    return Composition(std::move(counts));
}

FillingStatistics statistics(const Filling& t) { return {inv(t), maj(t)}; }

StatisticsPlan::StatisticsPlan(const Partition& shape) : shape_(shape) {
    const auto pos = reading_positions(shape);
    auto at = [&](int r, int c) { return pos[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };
    for (int r = shape.length(); r >= 1; --r) {
        const int w = shape.row_length(r);
        for (int j = 1; j <= w; ++j) {
            for (int k = j + 1; k <= w; ++k) pairs_.push_back({at(r, j), at(r, k)});
        }
        if (r >= 2) {
            for (int j = 1; j <= w; ++j) {
                for (int k = j + 1; k <= w; ++k) pairs_.push_back({at(r, k), at(r - 1, j)});
            }
            for (int c = 1; c <= w; ++c) {
                const Cell u{r, c};
                const int weight = leg(shape, u) + 1;
                const int a = arm(shape, u);
                descents_.push_back({at(r, c), at(r - 1, c), weight, a});
                max_maj_ += weight;
                total_arm_ += a;
            }
        }
    }
}

FillingStatistics StatisticsPlan::evaluate(std::span<const int> w) const noexcept {
    int inversions = 0;
    for (const auto& p : pairs_) inversions += w[p.earlier] > w[p.later] ? 1 : 0;
    int major = 0;
    int arms = 0;
    for (const auto& d : descents_) {
        if (w[d.upper] > w[d.lower]) {
            major += d.weight;
            arms += d.arm;
        }
    }
    return {inversions - arms, major};
}

}  // namespace hhl
