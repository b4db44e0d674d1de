#include "qchain/fristedt.hpp"

#include "qchain/pochhammer.hpp"

#include <stdexcept>

namespace qchain {

namespace {

// (1/q)_m = prod_{s=1}^{m} (1 - q^{-s}).
Rational inv_poch(int m, const Rational& q) { return poch_std(1 / q, m); }

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

FristedtParams::FristedtParams(Rational q) : q_(std::move(q)) {
    if (q_ <= 0 || q_ >= 1) {
        throw std::invalid_argument("Fristedt parameter q must lie in (0, 1)");
    }
}

Rational uniform_mass(const Partition& lambda, const FristedtParams& p) { return pow(p.q(), lambda.size()); }

Enclosure fristedt_normalizer(const FristedtParams& p, const Rational& eps) {
    // prod_{r>=1} (1 - 1/(1/q)^r) = prod (1 - q^r)
    return poch_inf(1, 1 / p.q(), eps).bounds;
}

Rational f_kernel(int a, int b, const FristedtParams& p) {
    if (a < 0) {
        throw std::invalid_argument("f_kernel requires a >= 0");
    }
    if (b < 0 || b > a) {
        return 0;
    }
    return pow(p.q(), b) * poch_std(p.q(), a) / poch_std(p.q(), b);
}

TruncatedMatrix f_kernel_matrix(int l_max, const FristedtParams& p) {
    if (l_max < 0) {
        throw std::invalid_argument("L_max must be non-negative");
    }
    TruncatedMatrix k(static_cast<std::size_t>(l_max) + 1);
    for (int a = 0; a <= l_max; ++a) {
        for (int b = 0; b <= a; ++b) {
            k(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = f_kernel(a, b, p);
        }
    }
    return k;
}

Diagonalization f_diagonalization(int l_max, const FristedtParams& p) {
    if (l_max < 0) {
        throw std::invalid_argument("L_max must be non-negative");
    }
    const auto dim = static_cast<std::size_t>(l_max) + 1;
    const Rational& q = p.q();
    Diagonalization d{"fristedt", TruncatedMatrix(dim), TruncatedMatrix(dim), TruncatedMatrix(dim),
                      TruncatedMatrix(dim), TruncatedMatrix(dim)};
    std::vector<Rational> inv(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        inv[m] = inv_poch(static_cast<int>(m), q);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        const auto il = static_cast<long>(i);
        d.C(i, i) = poch_std(q, static_cast<int>(i)) / pow(q, il);
        d.E(i, i) = pow(q, il);
        for (std::size_t j = 0; j <= i; ++j) {
            const auto diff = static_cast<long>(i - j);
            d.M(i, j) = pow(q, il);
            Rational a = 1 / (pow(q, choose2(diff)) * inv[i - j]);
            d.A(i, j) = diff % 2 == 0 ? a : Rational(-a);
            d.Ainv(i, j) = 1 / inv[i - j];
        }
    }
    return d;
}

Rational f_kr_closed(int big_l, int j, int r, const FristedtParams& p) {
    if (j < 0 || j > big_l) {
        throw std::invalid_argument("f_kr_closed requires 0 <= j <= L");
    }
    if (r < 1) {
        throw std::invalid_argument("f_kr_closed requires r >= 1");
    }
    const Rational& q = p.q();
    Rational num = pow(q, j) * pow(q, static_cast<long>(big_l) * (r - 1)) * poch_std(q, big_l) *
                   inv_poch(big_l - j + r - 1, q);
    Rational den = poch_std(q, j) * inv_poch(big_l - j, q) * inv_poch(r - 1, q);
    return num / den;
}

Enclosure row_law_limit(int r, int j, const FristedtParams& p, const Rational& eps) {
    if (r < 1 || j < 0) {
        throw std::invalid_argument("row_law_limit requires r >= 1, j >= 0");
    }
    const Rational& q = p.q();
    const Rational factor = pow(q, static_cast<long>(r) * j) / (poch_std(q, j) * poch_std(q, r - 1));
    return scale(fristedt_normalizer(p, eps), factor);
}

Rational f_first_row_ratio(int a, const FristedtParams& p) {
    if (a < 0) {
        return 0;
    }
    return pow(p.q(), a) / poch_std(p.q(), a);
}

Rational f_chain_mass(const Partition& lambda, const FristedtParams& p) {
    auto rows = lambda.parts();
    if (rows.empty()) {
        return f_first_row_ratio(0, p);
    }
    Rational mass = f_first_row_ratio(rows.front(), p);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        mass *= f_kernel(rows[i], rows[i + 1], p);
    }
    return mass * f_kernel(rows.back(), 0, p);
}

namespace {

// The first-row law q^a (q)_inf / (q)_a is at most q^a, so the tail past
// A is at most q^{A+1} / (1 - q).
int fristedt_support_cap(const FristedtParams& p) {
    const Rational bound = support_tail_bound();
    const Rational& q = p.q();
    Rational tail = q / (1 - q);
    int cap = 0;
    while (tail >= bound) {
        tail *= q;
        ++cap;
    }
    return cap;
}

}  // namespace

FristedtSampler::FristedtSampler(const FristedtParams& p)
    : params_(p), first_([&] {
          const int cap = fristedt_support_cap(p);
          std::vector<Rational> w;
          for (int a = 0; a <= cap; ++a) {
              w.push_back(f_first_row_ratio(a, p));
          }
          return ExactDiscreteSampler(std::move(w));
      }()) {
    const int cap = support_cap();
    rows_.reserve(static_cast<std::size_t>(cap) + 1);
    for (int a = 0; a <= cap; ++a) {
        std::vector<Rational> w;
        for (int b = 0; b <= a; ++b) {
            w.push_back(f_kernel(a, b, p));
        }
        rows_.emplace_back(std::move(w));
    }
}

ChainSample FristedtSampler::draw(std::uint64_t seed) const {
    RandomStream stream(seed);
    ChainSample out;
    out.seed = seed;
    auto a = static_cast<int>(first_.draw(stream.next_uniform()));
    while (a > 0) {
        out.sequence.push_back(a);
        a = static_cast<int>(rows_[static_cast<std::size_t>(a)].draw(stream.next_uniform()));
    }
    out.partition = Partition(out.sequence);
    return out;
}

ChainSample f_sample(const FristedtParams& p, std::uint64_t seed) { return FristedtSampler(p).draw(seed); }

}  // namespace qchain
