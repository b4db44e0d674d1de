#pragma once

#include "qchain/rational.hpp"

#include <cstddef>
#include <vector>

namespace qchain {

// Square (L_max+1) x (L_max+1) exact matrix, the leading block of an
// infinite matrix indexed by 0, 1, 2, ... When every factor is lower
// triangular the truncated product equals the truncation of the infinite
// product, which is what makes finite checks meaningful.
class TruncatedMatrix {
  public:
    TruncatedMatrix() = default;
    explicit TruncatedMatrix(std::size_t dim);

    static TruncatedMatrix identity(std::size_t dim);
    static TruncatedMatrix diagonal(std::vector<Rational> entries);

    std::size_t dim() const { return dim_; }
    std::size_t l_max() const { return dim_ - 1; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

    bool is_lower_triangular() const;
    bool is_diagonal() const;

    TruncatedMatrix power(unsigned r) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b);
    friend bool operator==(const TruncatedMatrix& a, const TruncatedMatrix& b) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

}  // namespace qchain
