#include "qchain/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qchain {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_columns(std::span<const int> columns) {
    std::vector<int> cols(columns.begin(), columns.end());
    while (!cols.empty() && cols.back() == 0) {
        cols.pop_back();
    }
    return Partition(std::move(cols)).conjugate();
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        ++m[static_cast<std::size_t>(p - 1)];
    }
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

long n_stat(const Partition& p) {
    long total = 0;
    auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        total += static_cast<long>(i) * parts[i];
    }
    return total;
}

long column_square_sum(const Partition& p) {
    long total = 0;
    for (int c : p.columns()) {
        total += static_cast<long>(c) * c;
    }
    return total;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        extend(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    if (n > cap) {
        throw SizeCapExceeded("partition enumeration size " + std::to_string(n) +
                              " exceeds cap " + std::to_string(cap));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    extend(n, n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_size, int cap) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = enumerate_partitions(n, cap);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

}  // namespace qchain
