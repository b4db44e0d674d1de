#pragma once

// Two q-Pochhammer conventions are in use and both appear side by side:
//
//   standard    (x)_n = (1 - x)(1 - x^2)...(1 - x^n)
//   descending  (x)_n = (1 - x)(1 - x/q)...(1 - x/q^{n-1})
//
// The standard form drives the Andrews-Gordon sums and the Fristedt chain;
// the descending form drives the GL(n,q) chain, its diagonalization and the
// Bailey pairs. Every caller names the one it uses.

#include "qchain/qseries.hpp"
#include "qchain/rational.hpp"

namespace qchain {

Rational poch_std(const Rational& x, int n);
QSeries poch_std(const QSeries& x, int n);

// Result of a descending Pochhammer symbol. For n < 0 the symbol is zero
// by convention; any term dividing by such a value vanishes, so the value
// itself is never consulted.
struct PochValue {
    Rational value;
    bool is_zero_by_convention = false;
};

PochValue poch_desc(const Rational& x, int n, const Rational& q);

// Descending symbol for n >= 0; throws std::domain_error for n < 0. Use in
// places where a negative index cannot arise.
Rational poch_desc_value(const Rational& x, int n, const Rational& q);

class SingularExtension : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// The n = -1 value 1/(1 - x q) that keeps the recurrence
// (x)_n = (x)_{n-1} (1 - x/q^{n-1}) valid at n = 0. Only n = -1 is defined.
Rational poch_desc_extended(const Rational& x, int n, const Rational& q);

// Certified enclosure of prod_{r>=1} (1 - x/q^r) for q > 1, 0 <= x < q.
// The width of the returned interval is at most eps.
struct InfiniteProduct {
    Enclosure bounds;
    int factors = 0;  // number of factors in the partial product
};

InfiniteProduct poch_inf(const Rational& x, const Rational& q, const Rational& eps);

}  // namespace qchain
