#pragma once

#include "qchain/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qchain {

// Which formal variable a series is written in. Theta sums carry
// half-integer powers of x; those are expressed in y with y^2 = x.
enum class Variable { x, y };

const char* variable_name(Variable v);

class NotInvertible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Truncated power series c_0 + c_1 t + ... + c_order t^order with exact
// rational coefficients. Coefficients beyond `order` are unknown, not zero:
// binary operations shrink to the smaller order and equality only compares
// the common prefix.
class QSeries {
  public:
    explicit QSeries(std::size_t order, Variable var = Variable::x);
    QSeries(std::vector<Rational> coefficients, Variable var = Variable::x);

    static QSeries one(std::size_t order, Variable var = Variable::x);
    // c * t^exponent, or zero when exponent > order.
    static QSeries monomial(const Rational& c, std::size_t exponent, std::size_t order,
                            Variable var = Variable::x);

    std::size_t order() const { return coeffs_.size() - 1; }
    Variable variable() const { return var_; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    void set(std::size_t k, Rational value) { coeffs_.at(k) = std::move(value); }
    void add_to(std::size_t k, const Rational& value);

    QSeries truncated(std::size_t order) const;
    QSeries inverse() const;
    // Multiplies by t^shift, dropping terms past the current order.
    QSeries shifted(std::size_t shift) const;

    // Rewrites a y-series as a series in x = y^2. Every odd coefficient
    // must vanish; the result has order floor(order/2).
    QSeries to_x() const;
    // Rewrites an x-series in y = sqrt(x); order doubles.
    QSeries to_y() const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const QSeries& rhs);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator-(QSeries a);

    // Equality up to the common truncation order.
    friend bool operator==(const QSeries& a, const QSeries& b);

  private:
    std::vector<Rational> coeffs_;
    Variable var_;
};

// Smallest exponent at which two series differ within their common
// order, or nullopt when they agree there.
std::optional<std::size_t> first_mismatch(const QSeries& a, const QSeries& b);

QSeries series_inv(const QSeries& s);

// Product of `a` and `b` truncated at `order` (which may be below both
// operand orders). Cheaper than multiplying and truncating afterwards.
QSeries multiply_truncated(const QSeries& a, const QSeries& b, std::size_t order);

}  // namespace qchain
