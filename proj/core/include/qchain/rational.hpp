#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qchain {

// Exact rational scalar. mpq_class arithmetic always yields canonical
// (reduced, positive-denominator) results; the helpers below keep that
// invariant for values built from raw numerator/denominator pairs.
using Rational = mpq_class;
using Integer = mpz_class;

class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p/q", "-p/q" or "p". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& r);

// r^e for any integer e; throws DomainError for 0^e with e < 0.
Rational pow(const Rational& r, long e);

// Integer power of a positive base as an exact rational 2^-k etc.
Rational dyadic(long k);

bool is_reduced(const Rational& r);

double to_double(const Rational& r);

// Closed interval [lower, upper] known to contain a quantity that is not
// itself representable (infinite products and sums).
struct Enclosure {
    Rational lower;
    Rational upper;

    Rational width() const { return upper - lower; }
    Rational midpoint() const { return (lower + upper) / 2; }
    bool contains(const Rational& x) const { return lower <= x && x <= upper; }
    bool overlaps(const Enclosure& other) const {
        return lower <= other.upper && other.lower <= upper;
    }

    static Enclosure exact(const Rational& x) { return {x, x}; }
};

// Scales by a non-negative factor.
Enclosure scale(const Enclosure& e, const Rational& factor);
Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);  // both non-negative

}  // namespace qchain
