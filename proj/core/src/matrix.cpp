#include "qchain/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchain {

TruncatedMatrix::TruncatedMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be positive");
    }
}

TruncatedMatrix TruncatedMatrix::identity(std::size_t dim) {
    TruncatedMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

TruncatedMatrix TruncatedMatrix::diagonal(std::vector<Rational> entries) {
    TruncatedMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(i, i) = std::move(entries[i]);
    }
    return m;
}

bool TruncatedMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if ((*this)(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool TruncatedMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i != j && (*this)(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    const std::size_t n = a.dim_;
    TruncatedMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) != 0) {
                    out(i, j) += aik * bkj;
                }
            }
        }
    }
    return out;
}

TruncatedMatrix TruncatedMatrix::power(unsigned r) const {
    TruncatedMatrix result = identity(dim_);
    for (unsigned i = 0; i < r; ++i) {
        result = result * *this;
    }
    return result;
}

std::vector<Rational> TruncatedMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("vector length does not match matrix dimension");
    }
    std::vector<Rational> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) {
                out[i] += (*this)(i, j) * v[j];
            }
        }
    }
    return out;
}

}  // namespace qchain
