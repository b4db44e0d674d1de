#include "oracles.hpp"

#include "qchain/glchain.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <tuple>

using namespace qchain;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

const std::vector<MeasureParams>& tested_params() {
    static const std::vector<MeasureParams> params{
        MeasureParams(r(2), r(1, 2)), MeasureParams(r(3), r(1, 3)), MeasureParams(r(5, 2), r(2, 5)),
        MeasureParams(r(2), r(1))};
    return params;
}

}  // namespace

TEST_CASE("kernel values") {
    const MeasureParams p(r(3), r(2, 7));
    const Rational& u = p.u();
    const Rational& q = p.q();
    CHECK(kernel(0, 0, p) == 1);
    CHECK(kernel(1, 1, p) == u / q);
    CHECK(kernel(1, 0, p) == 1 - u / q);
    for (int a = 0; a <= 6; ++a) {
        CHECK(kernel(a, 0, p) == poch_desc_value(u / q, a, q));
    }
    CHECK(kernel(3, 4, p) == 0);
    CHECK(kernel(3, -1, p) == 0);
}

TEST_CASE("kernel rows sum to exactly one") {
    for (const auto& p : tested_params()) {
        for (int a = 0; a <= 40; ++a) {
            Rational total = 0;
            for (int b = 0; b <= a; ++b) {
                total += kernel(a, b, p);
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("first-column law") {
    const MeasureParams p(r(2), r(1, 2));
    const Rational eps = dyadic(-60);
    const Enclosure z = measure_prefactor(p, eps);
    CHECK(first_col_ratio(1, p) == r(2, 3));
    const Enclosure p1 = first_col_law(1, p, eps);
    CHECK(p1.contains(r(2, 3) * z.midpoint()));
    CHECK(p1.width() <= eps);

    Rational total = 0;
    for (int a = 0; a <= 30; ++a) {
        total += first_col_ratio(a, p);
    }
    const Rational tol = make_rational(1, 10000000000L);
    CHECK(total * z.lower >= 1 - tol);
    CHECK(total * z.upper <= 1 + tol);
    CHECK_THROWS_AS(first_col_law(0, MeasureParams(r(2), r(1)), eps), DomainError);
}

TEST_CASE("second-proof recursion for P(a)") {
    // sum_{b<=a} P(b) u^a / (P(a) q^{a^2} (1/q)_{a-b}) = 1 with P ratios only.
    for (const auto& p : tested_params()) {
        for (int a = 0; a <= 20; ++a) {
            Rational total = 0;
            for (int b = 0; b <= a; ++b) {
                total += first_col_ratio(b, p) * pow(p.u(), a) /
                         (first_col_ratio(a, p) * pow(p.q(), static_cast<long>(a) * a) *
                          poch_desc_value(p.inv_q(), a - b, p.q()));
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("diagonalization identities") {
    for (const auto& p : tested_params()) {
        const int l_max = p.u() == make_rational(1, 2) ? 29 : 14;
        const auto d = build_diagonalization(l_max, p);
        const auto dim = static_cast<std::size_t>(l_max) + 1;
        CHECK(d.C.is_diagonal());
        CHECK(d.E.is_diagonal());
        CHECK(d.A.is_lower_triangular());
        CHECK(d.Ainv.is_lower_triangular());
        CHECK(d.M.is_lower_triangular());
        CHECK(d.Ainv(0, 0) == 1);
        CHECK(d.E(0, 0) == 1);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto jl = static_cast<long>(j);
            CHECK(d.E(j, j) == pow(p.u(), jl) / pow(p.q(), jl * jl));
        }
        CHECK(d.A * d.Ainv == TruncatedMatrix::identity(dim));
        CHECK(d.M * d.A == d.A * d.E);
        CHECK(kernel_matrix(l_max, p) == d.C * d.M * d.c_inverse());
    }
}

TEST_CASE("truncation commutes with products of lower-triangular matrices") {
    const MeasureParams p(r(2), r(1, 2));
    const auto big = kernel_matrix(12, p);
    const auto small = kernel_matrix(7, p);
    const auto big3 = big.power(3);
    const auto small3 = small.power(3);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(big3(i, j) == small3(i, j));
        }
    }
}

TEST_CASE("closed-form powers match repeated multiplication") {
    const MeasureParams p(r(2), r(1, 2));
    const auto powers = oracle::matrix_powers(kernel_matrix(20, p), 8);
    for (int r_steps = 1; r_steps <= 8; ++r_steps) {
        for (int big_l = 0; big_l <= 20; ++big_l) {
            for (int j = 0; j <= big_l; ++j) {
                CHECK(kr_closed(big_l, j, r_steps, p) ==
                      powers[static_cast<std::size_t>(r_steps)](static_cast<std::size_t>(big_l), static_cast<std::size_t>(j)));
            }
        }
    }
    for (int r_steps = 1; r_steps <= 6; ++r_steps) {
        CHECK(kr_closed(0, 0, r_steps, p) == 1);
    }
    CHECK_THROWS_AS(kr_closed(2, 3, 1, p), std::invalid_argument);
}

TEST_CASE("closed-form powers at u = 1") {
    const MeasureParams p(r(3), r(1));
    for (int big_l = 0; big_l <= 10; ++big_l) {
        for (int j = 0; j <= big_l; ++j) {
            CHECK(kr_closed(big_l, j, 1, p) == kernel(big_l, j, p));
        }
    }
}

TEST_CASE("absorption probabilities are stochastic and grow with r") {
    const MeasureParams p(r(2), r(1, 2));
    for (int big_l = 0; big_l <= 20; ++big_l) {
        Rational previous = -1;
        for (int r_steps = 1; r_steps <= 8; ++r_steps) {
            Rational total = 0;
            for (int j = 0; j <= big_l; ++j) {
                total += kr_closed(big_l, j, r_steps, p);
            }
            CHECK(total == 1);
            const Rational absorbed = kr_closed(big_l, 0, r_steps, p);
            CHECK(absorbed >= previous);
            previous = absorbed;
        }
    }
}

TEST_CASE("chain mass is proportional to the measure") {
    const MeasureParams p(r(2), r(1, 2));
    CHECK(chain_mass(Partition(), p) == 1);
    CHECK(chain_mass(Partition({1}), p) == first_col_ratio(1, p) * kernel(1, 0, p));
    for (const auto& lambda : enumerate_partitions_up_to(10)) {
        CHECK(chain_mass(lambda, p) == mass_v1(lambda, p));
    }
}

TEST_CASE("Markov property against brute-force conditional laws") {
    // Conditional law of lambda'_{i+1} given lambda'_i = a from truncated
    // sums of M_u over |lambda| <= 14; the omitted mass tau bounds the error.
    const MeasureParams p(r(2), r(1, 2));
    const int max_size = 14;
    const Enclosure z = measure_prefactor(p, dyadic(-80));
    Rational kept = 0;
    // key (i, a, b) -> sum of masses with lambda'_i = a, lambda'_{i+1} = b
    std::map<std::tuple<int, int, int>, Rational> joint;
    std::map<std::pair<int, int>, Rational> marginal;
    for (const auto& lambda : enumerate_partitions_up_to(max_size)) {
        const Rational m = mass_v1(lambda, p);
        kept += m;
        auto cols = lambda.columns();
        for (int i = 1; i <= 3; ++i) {
            auto col = [&](int idx) { return idx <= static_cast<int>(cols.size()) ? cols[static_cast<std::size_t>(idx - 1)] : 0; };
            joint[{i, col(i), col(i + 1)}] += m;
            marginal[{i, col(i)}] += m;
        }
    }
    const Rational tau = 1 / z.lower - kept;
    CHECK(tau > 0);
    int checked = 0;
    for (const auto& [key, s_ab] : joint) {
        const auto [i, a, b] = key;
        const Rational& s_a = marginal[{i, a}];
        if (s_a < 100 * tau) {
            continue;  // too little mass for a meaningful bound
        }
        const Rational k = kernel(a, b, p);
        CHECK(k >= s_ab / (s_a + tau));
        CHECK(k <= (s_ab + tau) / s_a);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("sampler is deterministic and follows the first-column law") {
    const MeasureParams p(r(2), r(1, 2));
    const GlSampler sampler(p);
    CHECK(sampler.support_cap() >= 5);
    const auto a = sampler.draw(42);
    const auto b = sampler.draw(42);
    CHECK(a.sequence == b.sequence);
    CHECK(a.partition == b.partition);
    CHECK(sample(p, 42).sequence == a.sequence);

    const int n = 20000;
    std::vector<int> counts(12, 0);
    for (int s = 0; s < n; ++s) {
        const auto smp = sampler.draw(derive_seed(7, static_cast<std::uint64_t>(s)));
        for (std::size_t k = 1; k < smp.sequence.size(); ++k) {
            CHECK(smp.sequence[k] <= smp.sequence[k - 1]);
        }
        CHECK(smp.partition.conjugate().parts().size() == smp.sequence.size());
        const int first = smp.sequence.empty() ? 0 : smp.sequence.front();
        ++counts[static_cast<std::size_t>(std::min(first, 11))];
    }
    const Enclosure z = measure_prefactor(p, dyadic(-40));
    for (int k = 0; k <= 4; ++k) {
        const double prob = to_double(first_col_ratio(k, p) * z.midpoint());
        const double sigma = std::sqrt(prob * (1 - prob) / n);
        CHECK(std::abs(counts[static_cast<std::size_t>(k)] / static_cast<double>(n) - prob) <= 4 * sigma + 1e-12);
    }
    CHECK_THROWS_AS(GlSampler(MeasureParams(r(2), r(1))), DomainError);
}
