#include "qchain/rational.hpp"

#include <algorithm>
#include <cctype>

namespace qchain {

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out, bool allow_sign) {
    if (s.empty()) {
        return false;
    }
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        start = 1;
    }
    if (start == s.size()) {
        return false;
    }
    if (!std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
        return false;
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Integer num;
    Integer den(1);
    bool ok = false;
    if (slash == std::string_view::npos) {
        ok = parse_integer(text, num, true);
    } else {
        ok = parse_integer(text.substr(0, slash), num, true) &&
             parse_integer(text.substr(slash + 1), den, false);
    }
    if (!ok) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) {
            throw DomainError("zero raised to a negative power");
        }
        Rational inv = 1 / r;
        return pow(inv, -e);
    }
    Integer num;
    Integer den;
    auto ue = static_cast<unsigned long>(e);
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), ue);
    // Powers of coprime integers stay coprime.
    return Rational(num, den);
}

Rational dyadic(long k) { return pow(Rational(2), k); }

bool is_reduced(const Rational& r) {
    if (r.get_den() <= 0) {
        return false;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

double to_double(const Rational& r) { return r.get_d(); }

Enclosure scale(const Enclosure& e, const Rational& factor) {
    if (factor < 0) {
        throw DomainError("enclosure scaled by a negative factor");
    }
    return {e.lower * factor, e.upper * factor};
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lower + b.lower, a.upper + b.upper};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    if (a.lower < 0 || b.lower < 0) {
        throw DomainError("enclosure product requires non-negative operands");
    }
    return {a.lower * b.lower, a.upper * b.upper};
}

}  // namespace qchain
