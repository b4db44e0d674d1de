#pragma once

// The column-length chain generating M_u: if lambda'_i = a then
// lambda'_{i+1} = b with probability
//
//   K(a, b) = u^b (1/q)_a (u/q)_a / (q^{b^2} (1/q)_{a-b} (1/q)_b (u/q)_b),
//
// with descending Pochhammer symbols throughout this header.

#include "qchain/matrix.hpp"
#include "qchain/measure.hpp"
#include "qchain/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qchain {

class SingularParameters : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Zero outside 0 <= b <= a.
Rational kernel(int a, int b, const MeasureParams& p);

// Exact part of the first-column law: u^a / (q^{a^2} (1/q)_a (u/q)_a).
// The law itself is this times (u/q)_infinity.
Rational first_col_ratio(int a, const MeasureParams& p);

// P(lambda'_1 = a) as a certified enclosure. Requires u < 1.
Enclosure first_col_law(int a, const MeasureParams& p, const Rational& eps);

TruncatedMatrix kernel_matrix(int l_max, const MeasureParams& p);

// K = C M C^{-1} and M A = A E, so K^r = C A E^r A^{-1} C^{-1}. Also
// reused by the Fristedt chain, where E holds the eigenvalues q^j.
struct Diagonalization {
    std::string model;
    TruncatedMatrix C;
    TruncatedMatrix M;
    TruncatedMatrix A;
    TruncatedMatrix Ainv;
    TruncatedMatrix E;

    // C^{-1}; C is diagonal with nonzero entries.
    TruncatedMatrix c_inverse() const;
};

Diagonalization build_diagonalization(int l_max, const MeasureParams& p);

// K^r(L, j) through the eigen-expansion, summing n = j..L.
Rational kr_closed(int big_l, int j, int r, const MeasureParams& p);

// P(lambda'_1) K(lambda'_1, lambda'_2) ... K(lambda'_l, 0) with the
// (u/q)_infinity factor of P dropped. Equal to mass_v1 for every lambda.
Rational chain_mass(const Partition& lambda, const MeasureParams& p);

Enclosure chain_mass_certified(const Partition& lambda, const MeasureParams& p, const Rational& eps);

// Samples partitions by running the chain. The first column is drawn from
// the first-column law restricted to 0..support_cap(), where the dropped
// tail has certified mass below 2^-64.
class GlSampler {
  public:
    explicit GlSampler(const MeasureParams& p);

    int support_cap() const { return static_cast<int>(first_.size()) - 1; }
    const Rational& first_column_probability(int a) const { return first_.probability(static_cast<std::size_t>(a)); }
    ChainSample draw(std::uint64_t seed) const;

  private:
    MeasureParams params_;
    ExactDiscreteSampler first_;
    std::vector<ExactDiscreteSampler> rows_;  // rows_[a] samples b given a
};

ChainSample sample(const MeasureParams& p, std::uint64_t seed);

}  // namespace qchain
