#include "qchain/qseries.hpp"

#include <algorithm>

namespace qchain {

const char* variable_name(Variable v) { return v == Variable::x ? "x" : "y"; }

namespace {

void require_same_variable(const QSeries& a, const QSeries& b) {
    if (a.variable() != b.variable()) {
        throw std::invalid_argument("series in different variables");
    }
}

}  // namespace

QSeries::QSeries(std::size_t order, Variable var) : coeffs_(order + 1), var_(var) {}

QSeries::QSeries(std::vector<Rational> coefficients, Variable var)
    : coeffs_(std::move(coefficients)), var_(var) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("series needs at least one coefficient");
    }
}

QSeries QSeries::one(std::size_t order, Variable var) {
    QSeries s(order, var);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::monomial(const Rational& c, std::size_t exponent, std::size_t order, Variable var) {
    QSeries s(order, var);
    if (exponent <= order) {
        s.coeffs_[exponent] = c;
    }
    return s;
}

void QSeries::add_to(std::size_t k, const Rational& value) { coeffs_.at(k) += value; }

QSeries QSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1),
                   var_);
}

QSeries QSeries::shifted(std::size_t shift) const {
    QSeries out(order(), var_);
    for (std::size_t k = 0; k + shift <= order(); ++k) {
        out.coeffs_[k + shift] = coeffs_[k];
    }
    return out;
}

QSeries QSeries::inverse() const {
    if (coeffs_[0] == 0) {
        throw NotInvertible("series with zero constant term is not invertible");
    }
    const std::size_t n = order();
    QSeries inv(n, var_);
    const Rational c0_inv = 1 / coeffs_[0];
    inv.coeffs_[0] = c0_inv;
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(coeffs_[j]) != 0) {
                acc += coeffs_[j] * inv.coeffs_[k - j];
            }
        }
        inv.coeffs_[k] = -acc * c0_inv;
    }
    return inv;
}

QSeries QSeries::to_x() const {
    if (var_ != Variable::y) {
        throw std::invalid_argument("series is already in x");
    }
    QSeries out(order() / 2, Variable::x);
    for (std::size_t k = 0; k <= order(); ++k) {
        if (k % 2 == 1) {
            if (coeffs_[k] != 0) {
                throw std::domain_error("odd power of y survives; not a series in x");
            }
        } else {
            out.coeffs_[k / 2] = coeffs_[k];
        }
    }
    return out;
}

QSeries QSeries::to_y() const {
    if (var_ != Variable::x) {
        throw std::invalid_argument("series is already in y");
    }
    QSeries out(2 * order(), Variable::y);
    for (std::size_t k = 0; k <= order(); ++k) {
        out.coeffs_[2 * k] = coeffs_[k];
    }
    return out;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    require_same_variable(*this, rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    require_same_variable(*this, rhs);
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

QSeries multiply_truncated(const QSeries& a, const QSeries& b, std::size_t order) {
    require_same_variable(a, b);
    const std::size_t n = std::min({a.order(), b.order(), order});
    QSeries out(n, a.variable());
    auto ca = a.coefficients();
    auto cb = b.coefficients();
    std::vector<Rational> acc(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(ca[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(cb[j]) != 0) {
                acc[i + j] += ca[i] * cb[j];
            }
        }
    }
    for (std::size_t k = 0; k <= n; ++k) {
        out.set(k, std::move(acc[k]));
    }
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    return multiply_truncated(a, b, std::min(a.order(), b.order()));
}

QSeries operator-(QSeries a) {
    for (auto& v : a.coeffs_) {
        v = -v;
    }
    return a;
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.var_ == b.var_ && !first_mismatch(a, b).has_value();
}

std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b) {
    require_same_variable(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k) {
        if (a[k] != b[k]) {
            return k;
        }
    }
    return std::nullopt;
}

QSeries series_inv(const QSeries& s) { return s.inverse(); }

}  // namespace qchain
