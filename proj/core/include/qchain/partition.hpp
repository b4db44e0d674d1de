#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchain {

// A weakly decreasing sequence of positive parts lambda_1 >= lambda_2 >= ...
class Partition {
  public:
    Partition() = default;
    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);

    // Builds a partition from column heights (its conjugate); trailing
    // zeros are ignored.
    static Partition from_columns(std::span<const int> columns);

    std::span<const int> parts() const { return parts_; }
    // lambda_i with 1-based i; 0 past the last part.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    std::size_t length() const { return parts_.size(); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    // m_i(lambda): number of parts equal to i.
    int multiplicity(int i) const;
    // m_1, m_2, ..., m_{lambda_1} (index 0 holds m_1).
    std::vector<int> multiplicities() const;

    Partition conjugate() const;
    // Column heights lambda'_1 >= lambda'_2 >= ...
    std::vector<int> columns() const { return conjugate().parts_; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

// n(lambda) = sum_i (i - 1) lambda_i.
long n_stat(const Partition& p);

// sum_i (lambda'_i)^2.
long column_square_sum(const Partition& p);

class SizeCapExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

inline constexpr int kDefaultEnumerationCap = 40;

// Every partition of n exactly once, in lexicographically decreasing order
// of part lists: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

// Partitions of every size 0..max_size, grouped by size in the same order.
std::vector<Partition> enumerate_partitions_up_to(int max_size, int cap = kDefaultEnumerationCap);

}  // namespace qchain
