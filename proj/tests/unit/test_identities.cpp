#include "oracles.hpp"

#include "qchain/identities.hpp"
#include "qchain/theta.hpp"

#include <doctest.h>

#include <cmath>

using namespace qchain;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

std::vector<Rational> as_rationals(const oracle::Poly& p) {
    std::vector<Rational> out;
    for (long long c : p) {
        out.emplace_back(static_cast<long>(c));
    }
    return out;
}

// Gordon's combinatorial form: partitions with lambda_j - lambda_{j+k-1} >= 2
// and at most i-1 parts equal to 1.
oracle::Poly gordon_counts(int k, int i, std::size_t order) {
    oracle::Poly counts(order + 1, 0);
    for (std::size_t m = 0; m <= order; ++m) {
        for (const auto& p : enumerate_partitions(static_cast<int>(m), 1000)) {
            bool ok = p.multiplicity(1) <= i - 1;
            for (std::size_t j = 1; ok && j + static_cast<std::size_t>(k) - 1 <= p.length(); ++j) {
                ok = p.part(j) - p.part(j + static_cast<std::size_t>(k) - 1) >= 2;
            }
            counts[m] += ok ? 1 : 0;
        }
    }
    return counts;
}

}  // namespace

TEST_CASE("sum and product sides, small values") {
    const QSeries s22 = ag_sum({2, 2, 4});
    CHECK(s22 == QSeries(as_rationals({1, 1, 1, 1, 2})));
    CHECK(ag_sum({2, 1, 10})[1] == 0);
    CHECK(ag_product({2, 2, 6}) == QSeries(as_rationals({1, 1, 1, 1, 2, 2, 3})));
    CHECK(ag_product({2, 1, 10})[1] == 0);
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k; ++i) {
            CHECK(ag_sum({k, i, 0}) == QSeries::one(0));
            CHECK(ag_product({k, i, 30})[0] == 1);
        }
    }
    CHECK_THROWS(AGSpec{1, 1, 10}.validate());
    CHECK_THROWS(AGSpec{3, 4, 10}.validate());
    CHECK_THROWS(AGSpec{3, 0, 10}.validate());
}

TEST_CASE("both sides against partition counting") {
    const std::size_t order = 20;
    for (int k = 2; k <= 4; ++k) {
        for (int i = 1; i <= k; ++i) {
            const int modulus = 2 * k + 1;
            const auto product_counts = oracle::count_restricted_partitions(order, [&](int part) {
                const int res = part % modulus;
                return res != 0 && res != i && res != modulus - i;
            });
            CHECK(ag_product({k, i, order}) == QSeries(as_rationals(product_counts)));
            CHECK(ag_sum({k, i, order}) == QSeries(as_rationals(gordon_counts(k, i, order))));
        }
    }
}

TEST_CASE("Andrews-Gordon identities hold through order 60") {
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1; i <= k; ++i) {
            const AGResult res = verify_ag({k, i, 60});
            CHECK_MESSAGE(res.holds, "k=" << k << " i=" << i);
            CHECK_FALSE(res.first_mismatch_order.has_value());
        }
    }
    CHECK(has_probabilistic_proof({3, 1, 10}));
    CHECK(has_probabilistic_proof({3, 3, 10}));
    CHECK_FALSE(has_probabilistic_proof({3, 2, 10}));
}

TEST_CASE("first mismatch is reported") {
    QSeries a = ag_sum({2, 2, 30});
    QSeries b = ag_product({2, 2, 30});
    CHECK_FALSE(first_mismatch(a, b).has_value());
    b.add_to(17, 1);
    CHECK(first_mismatch(a, b) == std::optional<std::size_t>(17));
}

TEST_CASE("probabilistic pipeline") {
    const std::size_t order = 60;
    for (int k = 2; k <= 4; ++k) {
        const QSeries lim0 = absorption_limit_series(k, 0, order);
        const QSeries lim1 = absorption_limit_series(k, 1, order);
        CHECK(lim0[0] == 1);
        CHECK(lim1[0] == 1);
        CHECK(lim0 == euler_product(1, order) * ag_sum({k, k, order}));
        CHECK(lim1 == euler_product(2, order) * ag_sum({k, 1, order}));
    }
}

TEST_CASE("absorption limit agrees with the finite-L closed form at u = 1") {
    // K^r(L, 0) at u = 1 is a polynomial in x = 1/q whose low coefficients
    // stabilize as L grows; compare numerically at several q.
    for (long qv : {5L, 7L}) {
        const MeasureParams p(r(qv), r(1));
        const Rational x = r(1, qv);
        const QSeries lim = absorption_limit_series(2, 0, 40);
        Rational value = 0;
        for (std::size_t e = 0; e <= 40; ++e) {
            value += lim[e] * pow(x, static_cast<long>(e));
        }
        const Rational finite = kr_closed(40, 0, 2, p);
        CHECK(std::abs(to_double(value - finite)) < 1e-22);
    }
}

TEST_CASE("theta route") {
    for (int k = 2; k <= 4; ++k) {
        const std::size_t order = 40;
        const QSeries lim_y = absorption_limit_series(k, 0, order).to_y();
        CHECK(lim_y == theta_sum(2 * k + 1, 1, 2 * order));
        CHECK(theta_sum(2 * k + 1, 1, 2 * order) == jacobi_product(1, 2 * k + 1, 2 * order));
    }
}

TEST_CASE("Bailey pairs") {
    const MeasureParams p(r(2), r(1, 2));
    const int l_max = 15;
    const auto d = build_diagonalization(l_max, p);

    const BaileyPair unit = BaileyPair::unit(l_max, p);
    CHECK(bailey_check(unit));
    CHECK(unit.beta()[0] == 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(l_max); ++i) {
        CHECK(unit.alpha()[i] == d.Ainv(i, 0));
    }
    const BaileyPair stepped = bailey_step(unit);
    CHECK(bailey_check(stepped));
    CHECK(stepped.alpha()[0] == unit.alpha()[0]);

    for (int j = 0; j <= 3; ++j) {
        std::vector<Rational> alpha(static_cast<std::size_t>(l_max) + 1, Rational(0));
        alpha[static_cast<std::size_t>(j)] = 1;
        std::vector<Rational> beta;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(l_max); ++i) {
            beta.push_back(d.A(i, static_cast<std::size_t>(j)));
        }
        CHECK(bailey_check(BaileyPair(alpha, beta, p)));
    }

    std::vector<Rational> bad_beta = unit.beta();
    bad_beta[3] += 1;
    const BaileyPair bad(unit.alpha(), bad_beta, p);
    CHECK_FALSE(bailey_check(bad));
    CHECK_THROWS_AS(bailey_step(bad), NotABaileyPair);
}

TEST_CASE("Bailey step on random pairs matches the matrix form") {
    const MeasureParams p(r(2), r(1, 2));
    const int l_max = 15;
    const auto d = build_diagonalization(l_max, p);
    const auto e2 = d.E * d.E;
    const auto m2 = d.M * d.M;
    oracle::RationalGen gen(2024);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> alpha;
        for (int i = 0; i <= l_max; ++i) {
            alpha.push_back(gen.next());
        }
        const BaileyPair pair = BaileyPair::from_alpha(alpha, p);
        CHECK(pair.beta() == d.A.apply(alpha));
        const BaileyPair once = bailey_step(pair);
        CHECK(bailey_check(once));
        CHECK(once.alpha() == d.E.apply(alpha));
        CHECK(once.beta() == d.M.apply(pair.beta()));
        CHECK(d.M.apply(pair.beta()) == d.A.apply(once.alpha()));
        const BaileyPair twice = bailey_step(once);
        CHECK(bailey_check(twice));
        CHECK(twice.alpha() == e2.apply(alpha));
        CHECK(twice.beta() == m2.apply(pair.beta()));
    }
}

TEST_CASE("eigenvector identity at other parameters") {
    for (const auto& p : {MeasureParams(r(3), r(1, 3)), MeasureParams(r(5, 2), r(2, 5))}) {
        const auto d = build_diagonalization(10, p);
        oracle::RationalGen gen(11);
        std::vector<Rational> alpha;
        for (int i = 0; i <= 10; ++i) {
            alpha.push_back(gen.next());
        }
        const BaileyPair pair = BaileyPair::from_alpha(alpha, p);
        const BaileyPair next = bailey_step(pair);
        CHECK(d.M.apply(pair.beta()) == d.A.apply(next.alpha()));
    }
}
