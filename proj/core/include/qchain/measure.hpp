#pragma once

#include "qchain/partition.hpp"
#include "qchain/pochhammer.hpp"
#include "qchain/rational.hpp"

namespace qchain {

// Parameters of the measure M_u: q > 1 and 0 < u <= 1. u = 1 is admitted
// because the Rogers-Ramanujan argument evaluates at u = 1; normalization
// only holds for u < 1.
class MeasureParams {
  public:
    MeasureParams(Rational q, Rational u);

    const Rational& q() const { return q_; }
    const Rational& u() const { return u_; }
    Rational inv_q() const { return 1 / q_; }
    Rational u_over_q() const { return u_ / q_; }
    bool is_probability() const { return u_ < 1; }

  private:
    Rational q_;
    Rational u_;
};

// |GL(m, q)| = prod_{i=0}^{m-1} (q^m - q^i).
Rational gl_order(int m, const Rational& q);

// u^{|lambda|} / (q^{sum (lambda'_i)^2} prod_i (1/q)_{m_i}), i.e. M_u(lambda)
// without the prefactor prod_{r>=1} (1 - u/q^r).
Rational mass_v1(const Partition& lambda, const MeasureParams& p);

// The same mass through multiplicities and general linear group orders:
// u^{|lambda|} / (q^{2 sum_{h<i} h m_h m_i + sum_i (i-1) m_i^2} prod_i |GL(m_i, q)|).
Rational mass_v2(const Partition& lambda, const MeasureParams& p);

// Certified enclosure of prod_{r>=1} (1 - u/q^r), width <= eps.
Enclosure measure_prefactor(const MeasureParams& p, const Rational& eps);

// M_u(lambda) as a certified enclosure.
Enclosure mass_v1_certified(const Partition& lambda, const MeasureParams& p, const Rational& eps);

}  // namespace qchain
