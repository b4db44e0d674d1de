#include "qchain/theta.hpp"

#include "qchain/pochhammer.hpp"

#include <stdexcept>

namespace qchain {

QSeries theta_sum(long a, long b, std::size_t order) {
    if (a <= b || b < 0) {
        throw std::invalid_argument("theta_sum requires A > B >= 0");
    }
    QSeries out(order, Variable::y);
    const auto limit = static_cast<long>(order);
    // A n^2 + B n grows in |n| on both sides of 0 once A > B.
    for (long n = 0;; ++n) {
        long e = a * n * n + b * n;
        if (e > limit) {
            break;
        }
        out.add_to(static_cast<std::size_t>(e), n % 2 == 0 ? 1 : -1);
    }
    for (long n = -1;; --n) {
        long e = a * n * n + b * n;
        if (e > limit) {
            break;
        }
        out.add_to(static_cast<std::size_t>(e), n % 2 == 0 ? 1 : -1);
    }
    return out;
}

QSeries jacobi_product(long v_exp, long w_exp, std::size_t order) {
    if (!(w_exp > v_exp && v_exp >= 0)) {
        throw std::invalid_argument("jacobi_product requires w_exp > v_exp >= 0");
    }
    QSeries out = QSeries::one(order, Variable::y);
    const auto limit = static_cast<long>(order);
    auto times_one_minus = [&](long e) {
        if (e > limit) {
            return;
        }
        // In-place multiplication by (1 - y^e), high coefficients first.
        for (long k = limit; k >= e; --k) {
            auto ku = static_cast<std::size_t>(k);
            auto src = static_cast<std::size_t>(k - e);
            if (sgn(out[src]) != 0) {
                out.add_to(ku, -out[src]);
            }
        }
    };
    for (long n = 1;; ++n) {
        long odd = w_exp * (2 * n - 1);
        long smallest = odd - v_exp;
        if (smallest > limit) {
            break;
        }
        times_one_minus(odd + v_exp);
        times_one_minus(odd - v_exp);
        times_one_minus(2 * n * w_exp);
    }
    return out;
}

bool q_binomial_check(int n, const Rational& q) {
    if (n < 0) {
        throw std::invalid_argument("q_binomial_check requires n >= 0");
    }
    const auto order = static_cast<std::size_t>(n);
    QSeries lhs(order, Variable::y);
    const Rational top = poch_std(q, n);
    for (int m = 0; m <= n; ++m) {
        Rational denom = poch_std(q, m) * poch_std(q, n - m);
        if (denom == 0) {
            throw std::domain_error("Gaussian binomial with vanishing (q)_m");
        }
        lhs.set(static_cast<std::size_t>(m), pow(q, (m * m + m) / 2) * top / denom);
    }
    QSeries rhs = QSeries::one(order, Variable::y);
    for (int i = 1; i <= n; ++i) {
        QSeries factor = QSeries::one(order, Variable::y);
        factor.set(1, pow(q, i));
        rhs *= factor;
    }
    return lhs == rhs;
}

}  // namespace qchain
