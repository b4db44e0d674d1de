#include "oracles.hpp"

#include "qchain/glchain.hpp"
#include "qchain/quiver.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace qchain;

namespace {

Rational r(long p, long q = 1) { return make_rational(p, q); }

Rational inv_poch(int m, const Rational& q) { return 1 / poch_desc_value(1 / q, m, q); }

// Untruncated P(a) from the column recursion
//   P(a) (1 - W(a)) = W(a) sum_{b < a} P(b) / prod_i (1/q)_{a_i - b_i},
// solved exactly in rationals. W(a) < 1 is needed for a != 0.
class ExactP {
  public:
    ExactP(const Quiver& g, const QuiverParams& p) : g_(g), p_(p) {}

    Rational operator()(const ColumnVector& a) {
        if (auto it = memo_.find(a); it != memo_.end()) {
            return it->second;
        }
        bool zero = true;
        for (int x : a) {
            zero = zero && x == 0;
        }
        Rational value = 1;
        if (!zero) {
            const Rational w = column_weight(a, g_, p_);
            Rational s = 0;
            for (const auto& b : vectors_below(a)) {
                if (b == a) {
                    continue;
                }
                Rational term = (*this)(b);
                for (std::size_t i = 0; i < a.size(); ++i) {
                    term *= inv_poch(a[i] - b[i], p_.q());
                }
                s += term;
            }
            value = w / (1 - w) * s;
        }
        memo_.emplace(a, value);
        return value;
    }

  private:
    Quiver g_;
    QuiverParams p_;
    std::map<ColumnVector, Rational> memo_;
};

std::vector<ColumnVector> vectors_with_sum_at_most(int n, int total) {
    std::vector<ColumnVector> out;
    ColumnVector cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(idx)] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

std::vector<PartitionTuple> tuples_up_to(int n, int total) {
    std::vector<PartitionTuple> out;
    PartitionTuple cur(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s <= left; ++s) {
            for (const auto& lambda : enumerate_partitions(s)) {
                cur[static_cast<std::size_t>(idx)] = lambda;
                rec(idx + 1, left - s);
            }
        }
    };
    rec(0, total);
    return out;
}

double rel_diff(const Rational& a, const Rational& b) { return std::abs(to_double((a - b) / b)); }

}  // namespace

TEST_CASE("construction") {
    CHECK_THROWS(Quiver(std::vector<std::vector<int>>{{0, 1}, {0, 0}}));
    CHECK_THROWS(Quiver(std::vector<std::vector<int>>{}));
    CHECK(Quiver::a2().is_connected());
    CHECK_FALSE(Quiver(std::vector<std::vector<int>>{{0, 0}, {0, 0}}).is_connected());
    const Quiver g = Quiver::from_edges(3, {{1, 2, 1}, {2, 3, 2}, {3, 3, 1}});
    CHECK(g.edges(0, 1) == 1);
    CHECK(g.edges(2, 1) == 2);
    CHECK(g.edges(2, 2) == 1);
    CHECK_THROWS(Quiver::from_edges(2, {{1, 3, 1}}));
    CHECK_THROWS(QuiverParams(r(2), {r(1)}));
    CHECK_THROWS(QuiverParams(r(1), {r(1, 2)}));
    CHECK_THROWS(QuiverParams(r(2), {r(0)}));
}

TEST_CASE("pairing and weights") {
    CHECK(pairing(Partition(), Partition({3, 1})) == 0);
    CHECK(pairing(Partition({1}), Partition({1})) == 1);
    CHECK(pairing(Partition({2, 1}), Partition({2, 1})) == 5);
    CHECK(pairing(Partition({3}), Partition({1, 1})) == 2);

    const QuiverParams one(r(3), {r(1, 4)});
    CHECK(tuple_weight({Partition()}, Quiver::single_point(), one) == 1);
    CHECK(tuple_weight({Partition({1})}, Quiver::jordan(), one) == r(1, 4) / (1 - r(1, 3)));

    const QuiverParams p(r(2), {r(1, 2)});
    const MeasureParams mp(r(2), r(1, 2));
    for (const auto& lambda : enumerate_partitions_up_to(10)) {
        CHECK(tuple_weight({lambda}, Quiver::single_point(), p) == mass_v1(lambda, mp));
    }
}

TEST_CASE("weight factorizes over columns") {
    const Quiver g = Quiver::a2();
    const QuiverParams p(r(3), {r(1, 3), r(1, 5)});
    for (const auto& t : tuples_up_to(2, 6)) {
        const auto cols = column_vectors(t);
        Rational product = 1;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const ColumnVector next = c + 1 < cols.size() ? cols[c + 1] : ColumnVector(2, 0);
            product *= quiver_m(cols[c], next, g, p);
        }
        CHECK(product == tuple_weight(t, g, p));
    }
}

TEST_CASE("normalizer") {
    const QuiverParams p(r(2), {r(1, 2)});
    const Rational eps = make_rational(1, 1000000000000L);
    const TruncatedSum z = normalizer(Quiver::single_point(), p, 30, eps);
    CHECK(z.converged);
    const Enclosure prod = poch_inf(r(1, 2), r(2), eps).bounds;
    CHECK(std::abs(to_double(1 / z.value - prod.midpoint())) < 1e-11);

    const TruncatedSum tiny = normalizer(Quiver::a2(), QuiverParams(r(2), {r(1, 1000000), r(1, 1000000)}), 6, eps);
    CHECK(std::abs(to_double(tiny.value - 1)) < 1e-5);

    const TruncatedSum a2 = normalizer(Quiver::a2(), QuiverParams(r(2), {r(1, 4), r(1, 4)}), 20, make_rational(1, 100000000));
    CHECK(a2.converged);
    CHECK(to_double(a2.last_shell) < 1e-8);
}

TEST_CASE("first-column masses") {
    const Rational eps = make_rational(1, 1000000000000L);
    const QuiverModel single(Quiver::single_point(), QuiverParams(r(2), {r(1, 2)}), 30, eps);
    const MeasureParams mp(r(2), r(1, 2));
    CHECK(single.first_cols({0}) == 1);
    for (int a = 0; a <= 5; ++a) {
        CHECK(rel_diff(single.first_cols({a}), first_col_ratio(a, mp)) < 1e-12);
        for (int b = 0; b <= a; ++b) {
            CHECK(std::abs(to_double(single.kernel({a}, {b}) - kernel(a, b, mp))) < 1e-12);
        }
    }

    const Rational u = r(1, 3);
    const Rational q = r(3);
    const QuiverModel jordan(Quiver::jordan(), QuiverParams(q, {u}), 40, eps);
    const Rational expected = u / ((1 - u) * (1 - 1 / q));
    CHECK(rel_diff(jordan.first_cols({1}) / jordan.first_cols({0}), expected) < 1e-10);
}

TEST_CASE("truncated P against the exact recursion") {
    const Quiver g = Quiver::a2();
    const QuiverParams p(r(2), {r(1, 4), r(1, 4)});
    const QuiverModel model(g, p, 20, make_rational(1, 100000000));
    ExactP exact(g, p);
    for (const auto& a : vectors_with_sum_at_most(2, 4)) {
        CHECK(rel_diff(model.first_cols(a), exact(a)) < 1e-6);
    }
}

TEST_CASE("kernel factorization, row sums and chain mass") {
    struct Case {
        Quiver g;
        QuiverParams p;
        int cap;
    };
    const std::vector<Case> cases{{Quiver::a2(), QuiverParams(r(2), {r(1, 4), r(1, 4)}), 20},
                                  {Quiver::jordan(), QuiverParams(r(3), {r(1, 3)}), 40}};
    for (const auto& c : cases) {
        const QuiverModel model(c.g, c.p, c.cap, make_rational(1, 100000000));
        const int n = c.g.vertices();
        for (const auto& a : vectors_with_sum_at_most(n, 4)) {
            Rational total = 0;
            for (const auto& b : vectors_below(a)) {
                const Rational k = model.kernel(a, b);
                CHECK(k == quiver_m(a, b, c.g, c.p) * model.first_cols(b) / model.first_cols(a));
                total += k;
            }
            CHECK(std::abs(to_double(total - 1)) < 1e-6);
        }
        CHECK(model.kernel(ColumnVector(static_cast<std::size_t>(n), 0), ColumnVector(static_cast<std::size_t>(n), 0)) == 1);

        const auto tuples = tuples_up_to(n, 6);
        const Rational ref_ratio = model.chain_mass(tuples.front()) / tuple_weight(tuples.front(), c.g, c.p);
        for (const auto& t : tuples) {
            CHECK(model.chain_mass(t) / tuple_weight(t, c.g, c.p) == ref_ratio);
        }
    }
}

TEST_CASE("sampler") {
    const Rational eps = make_rational(1, 1000000000000L);
    const QuiverModel model(Quiver::single_point(), QuiverParams(r(2), {r(1, 2)}), 30, eps);
    const QuiverSampler sampler(model);
    CHECK(sampler.draw(5) == sampler.draw(5));

    const MeasureParams mp(r(2), r(1, 2));
    const Enclosure z = measure_prefactor(mp, dyadic(-40));
    const int n = 20000;
    std::vector<int> counts(8, 0);
    for (int s = 0; s < n; ++s) {
        const auto t = sampler.draw(derive_seed(11, static_cast<std::uint64_t>(s)));
        REQUIRE(t.size() == 1);
        const auto cols = t[0].columns();
        ++counts[static_cast<std::size_t>(std::min(cols.empty() ? 0 : cols.front(), 7))];
    }
    for (int a = 0; a <= 4; ++a) {
        const double prob = to_double(first_col_ratio(a, mp) * z.midpoint());
        const double sigma = std::sqrt(prob * (1 - prob) / n);
        CHECK(std::abs(counts[static_cast<std::size_t>(a)] / static_cast<double>(n) - prob) <= 4 * sigma + 1e-12);
    }

    const QuiverModel a2(Quiver::a2(), QuiverParams(r(2), {r(1, 4), r(1, 4)}), 20, make_rational(1, 100000000));
    const QuiverSampler a2_sampler(a2);
    for (std::uint64_t s = 0; s < 200; ++s) {
        const auto t = a2_sampler.draw(s);
        CHECK(t.size() == 2);
    }

    const QuiverModel loose(Quiver::a2(), QuiverParams(r(2), {r(9, 10), r(9, 10)}), 4, make_rational(1, 100000000));
    CHECK_FALSE(loose.normalizer().converged);
    CHECK_THROWS_AS(QuiverSampler{loose}, NonConvergence);
}
