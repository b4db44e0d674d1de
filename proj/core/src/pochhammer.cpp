#include "qchain/pochhammer.hpp"

namespace qchain {

Rational poch_std(const Rational& x, int n) {
    if (n < 0) {
        throw std::invalid_argument("poch_std requires n >= 0");
    }
    Rational result = 1;
    Rational power = 1;
    for (int r = 1; r <= n; ++r) {
        power *= x;
        result *= 1 - power;
    }
    return result;
}

QSeries poch_std(const QSeries& x, int n) {
    if (n < 0) {
        throw std::invalid_argument("poch_std requires n >= 0");
    }
    QSeries result = QSeries::one(x.order(), x.variable());
    QSeries power = QSeries::one(x.order(), x.variable());
    const QSeries unit = QSeries::one(x.order(), x.variable());
    for (int r = 1; r <= n; ++r) {
        power *= x;
        result *= unit - power;
    }
    return result;
}

PochValue poch_desc(const Rational& x, int n, const Rational& q) {
    if (q == 0) {
        throw std::invalid_argument("poch_desc requires q != 0");
    }
    if (n < 0) {
        return {Rational(0), true};
    }
    Rational result = 1;
    Rational term = x;  // x / q^r
    for (int r = 0; r < n; ++r) {
        result *= 1 - term;
        term /= q;
    }
    return {result, false};
}

Rational poch_desc_value(const Rational& x, int n, const Rational& q) {
    if (n < 0) {
        throw std::domain_error("descending Pochhammer with negative index");
    }
    return poch_desc(x, n, q).value;
}

Rational poch_desc_extended(const Rational& x, int n, const Rational& q) {
    if (n != -1) {
        throw std::invalid_argument("poch_desc_extended is defined only at n = -1");
    }
    if (x * q == 1) {
        throw SingularExtension("(x)_{-1} is singular at x q = 1");
    }
    return 1 / (1 - x * q);
}

InfiniteProduct poch_inf(const Rational& x, const Rational& q, const Rational& eps) {
    if (q <= 1) {
        throw DomainError("infinite product needs q > 1");
    }
    if (x < 0 || x >= q) {
        throw DomainError("infinite product needs 0 <= x < q");
    }
    if (eps <= 0) {
        throw std::invalid_argument("eps must be positive");
    }
    InfiniteProduct out;
    if (x == 0) {
        out.bounds = Enclosure::exact(1);
        return out;
    }
    // Tail after R factors: sum_{r>R} x/q^r = x / (q^R (q - 1)). The missing
    // factors lie in (0, 1], and prod (1 - t_r) >= 1 - sum t_r.
    Rational partial = 1;
    Rational term = x / q;
    int r = 0;
    Rational tail = x / (q - 1);
    while (tail > eps / 2) {
        partial *= 1 - term;
        term /= q;
        tail /= q;
        ++r;
    }
    out.factors = r;
    Rational lower = partial * (1 - tail);
    if (lower < 0) {
        lower = 0;
    }
    out.bounds = {lower, partial};
    return out;
}

}  // namespace qchain
