#include "hhl/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hhl/error.hpp"

namespace hhl {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

std::string to_string(const Cell& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw InvalidPartitionError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InvalidPartitionError("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const noexcept {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

int Partition::column_height(int col) const noexcept {
    if (col < 1) return 0;
    int h = 0;
    for (int p : parts_) {
        if (p >= col) ++h;
        else break;
    }
    return h;
}

bool Partition::contains(const Cell& c) const noexcept {
    return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= row_length(c.row);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    const int width = parts_.empty() ? 0 : parts_.front();
    conj.reserve(static_cast<std::size_t>(width));
    for (int col = 1; col <= width; ++col) conj.push_back(column_height(col));
    return Partition(std::move(conj));
}

Partition Partition::with_rows_appended(int width, int count) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), static_cast<std::size_t>(std::max(count, 0)), width);
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw InvalidArgumentError("composition entries must be non-negative");
    }
}

int Composition::size() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Partition Composition::sorted_partition() const {
    std::vector<int> parts;
    for (int e : entries_) {
        if (e > 0) parts.push_back(e);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Composition Composition::operator+(const Composition& other) const {
    if (other.length() != length()) {
        throw InvalidArgumentError("composition lengths differ");
    }
    std::vector<int> sum(entries_.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = entries_[i] + other.entries_[i];
    return Composition(std::move(sum));
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
    return os << to_string(c);
}

std::string to_string(const Composition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

}  // namespace hhl
