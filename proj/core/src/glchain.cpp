#include "qchain/glchain.hpp"

#include <stdexcept>

namespace qchain {

namespace {

// (1/q)_n and (u/q)_n for n = 0..max, descending convention.
struct PochTables {
    std::vector<Rational> inv_q;
    std::vector<Rational> u_q;

    PochTables(int max, const MeasureParams& p) {
        inv_q.reserve(static_cast<std::size_t>(max) + 1);
        u_q.reserve(static_cast<std::size_t>(max) + 1);
        inv_q.emplace_back(1);
        u_q.emplace_back(1);
        Rational step = 1 / p.q();  // 1/q^{n}
        for (int n = 1; n <= max; ++n) {
            inv_q.push_back(inv_q.back() * (1 - step));
            u_q.push_back(u_q.back() * (1 - p.u() * step));
            step /= p.q();
        }
    }

    const Rational& iq(int n) const { return inv_q.at(static_cast<std::size_t>(n)); }
    const Rational& uq(int n) const { return u_q.at(static_cast<std::size_t>(n)); }
};

// (1 - u/q^{2i}) (u/q)_{i+j-1}: the numerator of A^{-1}(i, j). At i = j = 0
// it uses (u/q)_{-1} = 1/(1 - u); the product is 1, which is also its
// limit at u = 1.
Rational ainv_numerator(int i, int j, const MeasureParams& p, const PochTables& t) {
    if (i + j == 0) {
        if (p.u() == 1) {
            return 1;
        }
        return (1 - p.u()) * poch_desc_extended(p.u_over_q(), -1, p.q());
    }
    return (1 - p.u() / pow(p.q(), 2L * i)) * t.uq(i + j - 1);
}

long choose2(long n) { return n * (n - 1) / 2; }

Rational ainv_entry(int i, int j, const MeasureParams& p, const PochTables& t) {
    Rational v = ainv_numerator(i, j, p, t) / (pow(p.q(), choose2(i - j)) * t.iq(i - j));
    return (i - j) % 2 == 0 ? v : Rational(-v);
}

}  // namespace

Rational kernel(int a, int b, const MeasureParams& p) {
    if (a < 0) {
        throw std::invalid_argument("kernel requires a >= 0");
    }
    if (b < 0 || b > a) {
        return 0;  // (1/q)_{a-b} is zero by convention in the denominator
    }
    const Rational iq = p.inv_q();
    const Rational uq = p.u_over_q();
    Rational num = pow(p.u(), b) * poch_desc_value(iq, a, p.q()) * poch_desc_value(uq, a, p.q());
    Rational den = pow(p.q(), static_cast<long>(b) * b) * poch_desc_value(iq, a - b, p.q()) *
                   poch_desc_value(iq, b, p.q()) * poch_desc_value(uq, b, p.q());
    return num / den;
}

Rational first_col_ratio(int a, const MeasureParams& p) {
    if (a < 0) {
        return 0;
    }
    Rational den = pow(p.q(), static_cast<long>(a) * a) * poch_desc_value(p.inv_q(), a, p.q()) *
                   poch_desc_value(p.u_over_q(), a, p.q());
    return pow(p.u(), a) / den;
}

Enclosure first_col_law(int a, const MeasureParams& p, const Rational& eps) {
    if (!p.is_probability()) {
        throw DomainError("first-column law needs u < 1");
    }
    return scale(measure_prefactor(p, eps), first_col_ratio(a, p));
}

TruncatedMatrix kernel_matrix(int l_max, const MeasureParams& p) {
    if (l_max < 0) {
        throw std::invalid_argument("L_max must be non-negative");
    }
    const auto dim = static_cast<std::size_t>(l_max) + 1;
    TruncatedMatrix k(dim);
    for (int a = 0; a <= l_max; ++a) {
        for (int b = 0; b <= a; ++b) {
            k(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = kernel(a, b, p);
        }
    }
    return k;
}

TruncatedMatrix Diagonalization::c_inverse() const {
    std::vector<Rational> d(C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        d[i] = 1 / C(i, i);
    }
    return TruncatedMatrix::diagonal(std::move(d));
}

Diagonalization build_diagonalization(int l_max, const MeasureParams& p) {
    if (l_max < 0) {
        throw std::invalid_argument("L_max must be non-negative");
    }
    const PochTables t(2 * l_max, p);
    for (int n = 0; n <= 2 * l_max; ++n) {
        if (t.iq(n) == 0 || t.uq(n) == 0) {
            throw SingularParameters("a Pochhammer factor vanishes at these parameters");
        }
    }
    const auto dim = static_cast<std::size_t>(l_max) + 1;
    Diagonalization d{"gl", TruncatedMatrix(dim), TruncatedMatrix(dim), TruncatedMatrix(dim),
                      TruncatedMatrix(dim), TruncatedMatrix(dim)};
    for (int i = 0; i <= l_max; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        d.C(ii, ii) = t.iq(i) * t.uq(i);
        d.E(ii, ii) = pow(p.u(), i) / pow(p.q(), static_cast<long>(i) * i);
        for (int j = 0; j <= i; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            d.M(ii, jj) = pow(p.u(), j) / (pow(p.q(), static_cast<long>(j) * j) * t.iq(i - j));
            d.A(ii, jj) = 1 / (t.iq(i - j) * t.uq(i + j));
            d.Ainv(ii, jj) = ainv_entry(i, j, p, t);
        }
    }
    return d;
}

Rational kr_closed(int big_l, int j, int r, const MeasureParams& p) {
    if (j < 0 || j > big_l) {
        throw std::invalid_argument("kr_closed requires 0 <= j <= L");
    }
    if (r < 1) {
        throw std::invalid_argument("kr_closed requires r >= 1");
    }
    const PochTables t(2 * big_l, p);
    Rational sum = 0;
    for (int n = j; n <= big_l; ++n) {
        // A(L, n) E(n)^r A^{-1}(n, j)
        Rational term = pow(p.u(), static_cast<long>(r) * n) /
                        (pow(p.q(), static_cast<long>(r) * n * n) * t.iq(big_l - n) * t.uq(big_l + n));
        sum += term * ainv_entry(n, j, p, t);
    }
    return t.iq(big_l) * t.uq(big_l) / (t.iq(j) * t.uq(j)) * sum;
}

Rational chain_mass(const Partition& lambda, const MeasureParams& p) {
    const auto cols = lambda.columns();
    if (cols.empty()) {
        return first_col_ratio(0, p);
    }
    Rational mass = first_col_ratio(cols.front(), p);
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
        mass *= kernel(cols[i], cols[i + 1], p);
    }
    return mass * kernel(cols.back(), 0, p);
}

Enclosure chain_mass_certified(const Partition& lambda, const MeasureParams& p, const Rational& eps) {
    return scale(measure_prefactor(p, eps), chain_mass(lambda, p));
}

namespace {

// Smallest A with sum_{a > A} P(a) < 2^-64, using P(a) <= first_col_ratio(a)
// and the decreasing ratio bound r(a+1)/r(a) = u / (q^{2a+1} (1 - q^{-a-1}) (1 - u q^{-a-1})).
int gl_support_cap(const MeasureParams& p) {
    const Rational bound = support_tail_bound();
    for (int cap = 0;; ++cap) {
        const int next = cap + 1;
        const Rational qn = pow(p.q(), next);
        const Rational rho = p.u() / (pow(p.q(), 2L * next + 1) * (1 - 1 / qn) * (1 - p.u() / qn));
        if (rho >= 1) {
            continue;
        }
        if (first_col_ratio(next, p) / (1 - rho) < bound) {
            return cap;
        }
    }
}

}  // namespace

GlSampler::GlSampler(const MeasureParams& p)
    : params_(p),
      first_([&] {
          if (!p.is_probability()) {
              throw DomainError("sampling needs u < 1");
          }
          const int cap = gl_support_cap(p);
          std::vector<Rational> w;
          for (int a = 0; a <= cap; ++a) {
              w.push_back(first_col_ratio(a, p));
          }
          return ExactDiscreteSampler(std::move(w));
      }()) {
    const int cap = support_cap();
    rows_.reserve(static_cast<std::size_t>(cap) + 1);
    for (int a = 0; a <= cap; ++a) {
        std::vector<Rational> w;
        for (int b = 0; b <= a; ++b) {
            w.push_back(kernel(a, b, p));
        }
        rows_.emplace_back(std::move(w));
    }
}

ChainSample GlSampler::draw(std::uint64_t seed) const {
    RandomStream stream(seed);
    ChainSample out;
    out.seed = seed;
    auto a = static_cast<int>(first_.draw(stream.next_uniform()));
    while (a > 0) {
        out.sequence.push_back(a);
        a = static_cast<int>(rows_[static_cast<std::size_t>(a)].draw(stream.next_uniform()));
    }
    out.partition = Partition::from_columns(out.sequence);
    return out;
}

ChainSample sample(const MeasureParams& p, std::uint64_t seed) { return GlSampler(p).draw(seed); }

}  // namespace qchain
