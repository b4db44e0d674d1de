#pragma once

#include "qchain/qseries.hpp"

namespace qchain {

// sum over n in Z with A n^2 + B n <= order of (-1)^n y^{A n^2 + B n}.
// Requires A > B >= 0 so every exponent is non-negative.
QSeries theta_sum(long a, long b, std::size_t order);

// prod_{n>=1} (1 - v w^{2n-1})(1 - w^{2n-1}/v)(1 - w^{2n}) with v = y^v_exp,
// w = y^w_exp, truncated at `order`. Requires w_exp > v_exp >= 0.
QSeries jacobi_product(long v_exp, long w_exp, std::size_t order);

// Checks sum_m y^m q^{(m^2+m)/2} [n choose m]_q = (1 + yq)...(1 + yq^n) as
// exact polynomials in y, with the Gaussian binomial built from standard
// Pochhammer symbols (q)_n / ((q)_m (q)_{n-m}).
bool q_binomial_check(int n, const Rational& q);

}  // namespace qchain
