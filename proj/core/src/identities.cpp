#include "qchain/identities.hpp"

#include "qchain/pochhammer.hpp"

#include <functional>
#include <stdexcept>

namespace qchain {

void AGSpec::validate() const {
    if (k < 2) {
        throw std::invalid_argument("Andrews-Gordon needs k >= 2");
    }
    if (i < 1 || i > k) {
        throw std::invalid_argument("Andrews-Gordon needs 1 <= i <= k");
    }
}

namespace {

// 1/(x)_n for n = 0..max_n as series truncated at `order`.
std::vector<QSeries> inverse_poch_table(int max_n, std::size_t order) {
    std::vector<QSeries> table;
    table.reserve(static_cast<std::size_t>(max_n) + 1);
    QSeries poch = QSeries::one(order);
    table.push_back(poch);
    for (int n = 1; n <= max_n; ++n) {
        QSeries factor = QSeries::one(order);
        if (static_cast<std::size_t>(n) <= order) {
            factor.set(static_cast<std::size_t>(n), -1);
        }
        poch *= factor;
        table.push_back(poch.inverse());
    }
    return table;
}

}  // namespace

QSeries ag_sum(const AGSpec& spec) {
    spec.validate();
    const std::size_t order = spec.order;
    const int parts = spec.k - 1;
    const auto limit = static_cast<long>(order);
    long max_n = 0;
    while ((max_n + 1) * (max_n + 1) <= limit) {
        ++max_n;
    }
    const auto inv = inverse_poch_table(static_cast<int>(max_n), order);

    QSeries total(order);
    std::vector<long> big_n(static_cast<std::size_t>(parts), 0);
    // Position j (0-based) holds N_{j+1}; the linear part covers
    // N_i..N_{k-1}, i.e. positions i-1..k-2.
    std::function<void(int, long, long, long)> recurse = [&](int pos, long upper, long squares, long linear) {
        if (pos == parts) {
            const long e = squares + linear;
            if (e > limit) {
                return;
            }
            QSeries term = QSeries::monomial(1, static_cast<std::size_t>(e), order);
            const std::size_t room = order - static_cast<std::size_t>(e);
            QSeries factor = QSeries::one(room);
            for (int j = 0; j < parts; ++j) {
                const long next = j + 1 < parts ? big_n[static_cast<std::size_t>(j) + 1] : 0;
                const long n_j = big_n[static_cast<std::size_t>(j)] - next;
                factor = multiply_truncated(factor, inv[static_cast<std::size_t>(n_j)].truncated(room), room);
            }
            for (std::size_t c = 0; c <= room; ++c) {
                if (sgn(factor[c]) != 0) {
                    total.add_to(c + static_cast<std::size_t>(e), factor[c]);
                }
            }
            return;
        }
        for (long v = 0; v <= upper; ++v) {
            const long sq = squares + v * v;
            const long lin = linear + (pos >= spec.i - 1 ? v : 0);
            if (sq + lin > limit) {
                break;
            }
            big_n[static_cast<std::size_t>(pos)] = v;
            recurse(pos + 1, v, sq, lin);
        }
    };
    recurse(0, max_n, 0, 0);
    return total;
}

QSeries ag_product(const AGSpec& spec) {
    spec.validate();
    const std::size_t order = spec.order;
    const long modulus = 2L * spec.k + 1;
    // Multiply by 1/(1 - x^r) in place: c_m += c_{m-r}, increasing m.
    QSeries out = QSeries::one(order);
    for (long r = 1; r <= static_cast<long>(order); ++r) {
        const long res = r % modulus;
        if (res == 0 || res == spec.i || res == modulus - spec.i) {
            continue;
        }
        const auto ru = static_cast<std::size_t>(r);
        for (std::size_t m = ru; m <= order; ++m) {
            if (sgn(out[m - ru]) != 0) {
                out.add_to(m, out[m - ru]);
            }
        }
    }
    return out;
}

AGResult verify_ag(const AGSpec& spec) {
    AGResult result;
    result.spec = spec;
    result.first_mismatch_order = first_mismatch(ag_sum(spec), ag_product(spec));
    result.holds = !result.first_mismatch_order.has_value();
    return result;
}

bool has_probabilistic_proof(const AGSpec& spec) { return spec.i == 1 || spec.i == spec.k; }

QSeries euler_product(int from, std::size_t order) {
    QSeries out = QSeries::one(order);
    for (long s = std::max(from, 1); s <= static_cast<long>(order); ++s) {
        const auto su = static_cast<std::size_t>(s);
        for (std::size_t m = order; m >= su; --m) {
            if (sgn(out[m - su]) != 0) {
                out.add_to(m, -out[m - su]);
            }
        }
    }
    return out;
}

QSeries absorption_limit_series(int r, int delta, std::size_t order) {
    if (r < 1) {
        throw std::invalid_argument("absorption_limit_series needs r >= 1");
    }
    if (delta != 0 && delta != 1) {
        throw std::invalid_argument("delta must be 0 or 1");
    }
    const auto limit = static_cast<long>(order);
    QSeries total = QSeries::one(order);  // n = 0 term
    auto one_minus = [&](long e) {
        QSeries f = QSeries::one(order);
        if (e <= limit) {
            f.add_to(static_cast<std::size_t>(e), -1);
        }
        return f;
    };
    // Running products prod_{s=1}^{n-1}(1 - x^{delta+s}) and 1/prod_{s=1}^{n}(1 - x^s).
    QSeries numer = QSeries::one(order);
    QSeries denom = QSeries::one(order);
    for (long n = 1;; ++n) {
        const long e = r * n * n + static_cast<long>(delta) * r * n + n * (n - 1) / 2;
        if (e > limit) {
            break;
        }
        if (n >= 2) {
            numer *= one_minus(delta + n - 1);
        }
        denom *= one_minus(n);
        const std::size_t room = order - static_cast<std::size_t>(e);
        QSeries body = multiply_truncated(one_minus(delta + 2 * n).truncated(room), numer.truncated(room), room);
        body = multiply_truncated(body, denom.truncated(room).inverse(), room);
        const Rational sign = n % 2 == 0 ? 1 : -1;
        for (std::size_t c = 0; c <= room; ++c) {
            if (sgn(body[c]) != 0) {
                total.add_to(c + static_cast<std::size_t>(e), sign * body[c]);
            }
        }
    }
    return total;
}

// Bailey pairs.

std::vector<Rational> bailey_beta_from_alpha(const std::vector<Rational>& alpha, const MeasureParams& p) {
    const int l_max = static_cast<int>(alpha.size()) - 1;
    const Rational iq = p.inv_q();
    const Rational uq = p.u_over_q();
    std::vector<Rational> beta(alpha.size());
    for (int big_l = 0; big_l <= l_max; ++big_l) {
        for (int r = 0; r <= big_l; ++r) {
            const auto& a = alpha[static_cast<std::size_t>(r)];
            if (sgn(a) == 0) {
                continue;
            }
            beta[static_cast<std::size_t>(big_l)] +=
                a / (poch_desc_value(iq, big_l - r, p.q()) * poch_desc_value(uq, big_l + r, p.q()));
        }
    }
    return beta;
}

BaileyPair::BaileyPair(std::vector<Rational> alpha, std::vector<Rational> beta, MeasureParams params)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), params_(std::move(params)) {
    if (alpha_.empty() || alpha_.size() != beta_.size()) {
        throw std::invalid_argument("Bailey pair sequences must be non-empty and equally long");
    }
}

BaileyPair BaileyPair::from_alpha(std::vector<Rational> alpha, const MeasureParams& params) {
    auto beta = bailey_beta_from_alpha(alpha, params);
    return BaileyPair(std::move(alpha), std::move(beta), params);
}

BaileyPair BaileyPair::unit(int l_max, const MeasureParams& params) {
    const auto d = build_diagonalization(l_max, params);
    std::vector<Rational> alpha(static_cast<std::size_t>(l_max) + 1);
    std::vector<Rational> beta(alpha.size());
    beta[0] = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] = d.Ainv(i, 0);
    }
    return BaileyPair(std::move(alpha), std::move(beta), params);
}

bool bailey_check(const BaileyPair& pair) {
    return bailey_beta_from_alpha(pair.alpha(), pair.params()) == pair.beta();
}

BaileyPair bailey_step(const BaileyPair& pair) {
    if (!bailey_check(pair)) {
        throw NotABaileyPair("bailey_step input is not a Bailey pair");
    }
    const auto& p = pair.params();
    const Rational iq = p.inv_q();
    const auto n = pair.alpha().size();
    std::vector<Rational> alpha(n);
    std::vector<Rational> beta(n);
    for (std::size_t big_l = 0; big_l < n; ++big_l) {
        const auto l = static_cast<long>(big_l);
        alpha[big_l] = pow(p.u(), l) / pow(p.q(), l * l) * pair.alpha()[big_l];
        for (std::size_t r = 0; r <= big_l; ++r) {
            const auto rl = static_cast<long>(r);
            beta[big_l] += pow(p.u(), rl) /
                           (pow(p.q(), rl * rl) * poch_desc_value(iq, static_cast<int>(l - rl), p.q())) *
                           pair.beta()[r];
        }
    }
    return BaileyPair(std::move(alpha), std::move(beta), p);
}

}  // namespace qchain
