#include "qchain/measure.hpp"

#include <stdexcept>

namespace qchain {

MeasureParams::MeasureParams(Rational q, Rational u) : q_(std::move(q)), u_(std::move(u)) {
    if (q_ <= 1) {
        throw std::invalid_argument("measure parameter q must exceed 1");
    }
    if (u_ <= 0 || u_ > 1) {
        throw std::invalid_argument("measure parameter u must lie in (0, 1]");
    }
}

Rational gl_order(int m, const Rational& q) {
    if (m < 0) {
        throw std::invalid_argument("gl_order requires m >= 0");
    }
    const Rational qm = pow(q, m);
    Rational result = 1;
    Rational qi = 1;
    for (int i = 0; i < m; ++i) {
        result *= qm - qi;
        qi *= q;
    }
    return result;
}

Rational mass_v1(const Partition& lambda, const MeasureParams& p) {
    Rational denom = pow(p.q(), column_square_sum(lambda));
    const Rational inv_q = p.inv_q();
    for (int m : lambda.multiplicities()) {
        if (m > 0) {
            denom *= poch_desc_value(inv_q, m, p.q());
        }
    }
    return pow(p.u(), lambda.size()) / denom;
}

Rational mass_v2(const Partition& lambda, const MeasureParams& p) {
    const auto m = lambda.multiplicities();  // m[i-1] = m_i
    long exponent = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const long mi = m[i];
        const long index = static_cast<long>(i) + 1;
        exponent += (index - 1) * mi * mi;
        for (std::size_t h = 0; h < i; ++h) {
            exponent += 2 * (static_cast<long>(h) + 1) * m[h] * mi;
        }
    }
    Rational denom = pow(p.q(), exponent);
    for (int mi : m) {
        denom *= gl_order(mi, p.q());
    }
    return pow(p.u(), lambda.size()) / denom;
}

Enclosure measure_prefactor(const MeasureParams& p, const Rational& eps) {
    return poch_inf(p.u(), p.q(), eps).bounds;
}

Enclosure mass_v1_certified(const Partition& lambda, const MeasureParams& p, const Rational& eps) {
    return scale(measure_prefactor(p, eps), mass_v1(lambda, p));
}

}  // namespace qchain
