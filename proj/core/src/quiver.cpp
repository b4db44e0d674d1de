#include "qchain/quiver.hpp"

#include "qchain/pochhammer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qchain {

Quiver::Quiver(std::vector<std::vector<int>> multiplicity) : f_(std::move(multiplicity)) {
    const auto n = f_.size();
    if (n == 0) {
        throw std::invalid_argument("quiver needs at least one vertex");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (f_[i].size() != n) {
            throw std::invalid_argument("edge multiplicity matrix must be square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (f_[i][j] < 0) {
                throw std::invalid_argument("edge multiplicities must be non-negative");
            }
            if (f_[i][j] != f_[j][i]) {
                throw std::invalid_argument("edge multiplicity matrix must be symmetric");
            }
        }
    }
}

Quiver Quiver::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1) {
        throw std::invalid_argument("quiver needs at least one vertex");
    }
    std::vector<std::vector<int>> f(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const auto& e : edges) {
        if (e.from < 1 || e.from > n || e.to < 1 || e.to > n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.count < 0) {
            throw std::invalid_argument("edge multiplicities must be non-negative");
        }
        auto i = static_cast<std::size_t>(e.from - 1);
        auto j = static_cast<std::size_t>(e.to - 1);
        f[i][j] += e.count;
        if (i != j) {
            f[j][i] += e.count;
        }
    }
    return Quiver(std::move(f));
}

Quiver Quiver::single_point() { return Quiver(std::vector<std::vector<int>>{{0}}); }
Quiver Quiver::jordan() { return Quiver(std::vector<std::vector<int>>{{1}}); }
Quiver Quiver::a2() { return Quiver(std::vector<std::vector<int>>{{0, 1}, {1, 0}}); }

bool Quiver::is_connected() const {
    const auto n = f_.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (!seen[w] && f_[v][w] > 0) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

QuiverParams::QuiverParams(Rational q, std::vector<Rational> u) : q_(std::move(q)), u_(std::move(u)) {
    if (q_ <= 1) {
        throw std::invalid_argument("quiver parameter q must exceed 1");
    }
    if (u_.empty()) {
        throw std::invalid_argument("quiver parameters need one U per vertex");
    }
    for (const auto& ui : u_) {
        if (ui <= 0 || ui >= 1) {
            throw std::invalid_argument("each U_i must lie in (0, 1)");
        }
    }
}

namespace {

void require_matching(const Quiver& g, const QuiverParams& p) {
    if (static_cast<int>(p.u().size()) != g.vertices()) {
        throw std::invalid_argument("number of U parameters does not match the quiver");
    }
}

long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long total = 0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        total += static_cast<long>(a[i]) * b[i];
    }
    return total;
}

}  // namespace

long pairing(const Partition& lambda, const Partition& mu) { return dot(lambda.columns(), mu.columns()); }

Rational b_lambda(const Partition& lambda, const Rational& q) {
    Rational b = 1;
    const Rational inv_q = 1 / q;
    for (int m : lambda.multiplicities()) {
        if (m > 0) {
            b *= poch_std(inv_q, m);
        }
    }
    return b;
}

Rational tuple_weight(const PartitionTuple& t, const Quiver& g, const QuiverParams& p) {
    require_matching(g, p);
    if (static_cast<int>(t.size()) != g.vertices()) {
        throw std::invalid_argument("tuple length does not match the quiver");
    }
    const int n = g.vertices();
    std::vector<std::vector<int>> cols;
    cols.reserve(t.size());
    for (const auto& lambda : t) {
        cols.push_back(lambda.columns());
    }
    long exponent = 0;
    Rational weight = 1;
    for (int i = 0; i < n; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        for (int j = i; j < n; ++j) {
            exponent += g.edges(i, j) * dot(cols[ii], cols[static_cast<std::size_t>(j)]);
        }
        exponent -= dot(cols[ii], cols[ii]);
        weight *= pow(p.u()[ii], t[ii].size()) / b_lambda(t[ii], p.q());
    }
    return weight * pow(p.q(), exponent);
}

Rational column_weight(const ColumnVector& a, const Quiver& g, const QuiverParams& p) {
    require_matching(g, p);
    const int n = g.vertices();
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument("column vector length does not match the quiver");
    }
    long exponent = 0;
    Rational weight = 1;
    for (int i = 0; i < n; ++i) {
        const long ai = a[static_cast<std::size_t>(i)];
        for (int j = i; j < n; ++j) {
            exponent += g.edges(i, j) * ai * a[static_cast<std::size_t>(j)];
        }
        exponent -= ai * ai;
        weight *= pow(p.u()[static_cast<std::size_t>(i)], ai);
    }
    return weight * pow(p.q(), exponent);
}

Rational quiver_m(const ColumnVector& a, const ColumnVector& b, const Quiver& g, const QuiverParams& p) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("column vectors differ in length");
    }
    Rational den = 1;
    const Rational inv_q = 1 / p.q();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] < 0 || b[i] > a[i]) {
            return 0;
        }
        den *= poch_std(inv_q, a[i] - b[i]);
    }
    return column_weight(a, g, p) / den;
}

std::vector<ColumnVector> vectors_below(const ColumnVector& a) {
    std::vector<ColumnVector> out;
    ColumnVector cur(a.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == a.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= a[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<ColumnVector> column_vectors(const PartitionTuple& t) {
    std::size_t width = 0;
    for (const auto& lambda : t) {
        width = std::max(width, lambda.empty() ? std::size_t{0} : static_cast<std::size_t>(lambda.part(1)));
    }
    std::vector<ColumnVector> out(width, ColumnVector(t.size(), 0));
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto cols = t[i].columns();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out[c][i] = cols[c];
        }
    }
    return out;
}

QuiverModel::QuiverModel(Quiver g, QuiverParams p, int size_cap, const Rational& eps)
    : g_(std::move(g)), p_(std::move(p)) {
    require_matching(g_, p_);
    if (size_cap < 1) {
        throw std::invalid_argument("size cap must be positive");
    }
    const int n = g_.vertices();
    const auto nu = static_cast<std::size_t>(n);

    // Per-partition data shared by every tuple.
    struct Shape {
        Partition lambda;
        std::vector<int> cols;
        Rational inv_b;
    };
    std::vector<std::vector<Shape>> by_size(static_cast<std::size_t>(size_cap) + 1);
    for (int s = 0; s <= size_cap; ++s) {
        for (auto& lambda : enumerate_partitions(s, size_cap)) {
            auto cols = lambda.columns();
            Rational inv_b = 1 / b_lambda(lambda, p_.q());
            by_size[static_cast<std::size_t>(s)].push_back({std::move(lambda), std::move(cols), std::move(inv_b)});
        }
    }
    // U_i^s for every vertex and size.
    std::vector<std::vector<Rational>> u_pow(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        u_pow[i].push_back(1);
        for (int s = 1; s <= size_cap; ++s) {
            u_pow[i].push_back(u_pow[i].back() * p_.u()[i]);
        }
    }
    std::map<long, Rational> q_pow;
    auto qp = [&](long e) -> const Rational& {
        auto it = q_pow.find(e);
        if (it == q_pow.end()) {
            it = q_pow.emplace(e, pow(p_.q(), e)).first;
        }
        return it->second;
    };

    std::vector<Rational> shells(static_cast<std::size_t>(size_cap) + 1);
    std::vector<const Shape*> chosen(nu, nullptr);
    std::vector<int> sizes(nu, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == nu) {
            long exponent = 0;
            Rational weight = 1;
            ColumnVector first(nu, 0);
            for (std::size_t a = 0; a < nu; ++a) {
                const auto& ca = chosen[a]->cols;
                for (std::size_t b = a; b < nu; ++b) {
                    const int f = g_.edges(static_cast<int>(a), static_cast<int>(b));
                    if (f != 0) {
                        exponent += f * dot(ca, chosen[b]->cols);
                    }
                }
                exponent -= dot(ca, ca);
                weight *= u_pow[a][static_cast<std::size_t>(sizes[a])];
                weight *= chosen[a]->inv_b;
                first[a] = ca.empty() ? 0 : ca.front();
            }
            weight *= qp(exponent);
            shells[static_cast<std::size_t>(used)] += weight;
            first_cols_[first] += weight;
            ++tuple_count_;
            return;
        }
        for (int s = 0; s + used <= size_cap; ++s) {
            sizes[i] = s;
            for (const auto& shape : by_size[static_cast<std::size_t>(s)]) {
                chosen[i] = &shape;
                rec(i + 1, used + s);
            }
        }
    };
    rec(0, 0);

    normalizer_.size_cap = size_cap;
    for (const auto& s : shells) {
        normalizer_.value += s;
    }
    const auto& last = shells[static_cast<std::size_t>(size_cap)];
    const auto& before = shells[static_cast<std::size_t>(size_cap) - 1];
    normalizer_.last_shell = last;
    normalizer_.converged = abs(last) <= eps;
    if (before != 0) {
        Rational rho = last / before;
        normalizer_.tail_estimate = rho >= 0 && rho < 1 ? Rational(last * rho / (1 - rho)) : Rational(abs(last));
    } else {
        normalizer_.tail_estimate = abs(last);
    }
}

Rational QuiverModel::first_cols(const ColumnVector& a) const {
    auto it = first_cols_.find(a);
    return it == first_cols_.end() ? Rational(0) : it->second;
}

Rational QuiverModel::kernel(const ColumnVector& a, const ColumnVector& b) const {
    const Rational m = quiver_m(a, b, g_, p_);
    if (m == 0) {
        return 0;
    }
    const Rational pa = first_cols(a);
    if (pa == 0) {
        throw std::out_of_range("first-column state outside the truncated table");
    }
    return m * first_cols(b) / pa;
}

Rational QuiverModel::chain_mass(const PartitionTuple& t) const {
    const auto cols = column_vectors(t);
    const ColumnVector zero(static_cast<std::size_t>(g_.vertices()), 0);
    if (cols.empty()) {
        return first_cols(zero);
    }
    Rational mass = first_cols(cols.front());
    for (std::size_t c = 0; c + 1 < cols.size(); ++c) {
        mass *= kernel(cols[c], cols[c + 1]);
    }
    return mass * kernel(cols.back(), zero);
}

TruncatedSum normalizer(const Quiver& g, const QuiverParams& p, int size_cap, const Rational& eps) {
    return QuiverModel(g, p, size_cap, eps).normalizer();
}

Rational quiver_first_cols(const ColumnVector& a, const Quiver& g, const QuiverParams& p, int size_cap) {
    return QuiverModel(g, p, size_cap, Rational(1)).first_cols(a);
}

Rational quiver_kernel(const ColumnVector& a, const ColumnVector& b, const Quiver& g, const QuiverParams& p,
                       int size_cap) {
    return QuiverModel(g, p, size_cap, Rational(1)).kernel(a, b);
}

namespace {

std::vector<ColumnVector> table_states(const QuiverModel& model) {
    std::vector<ColumnVector> states;
    for (const auto& [a, mass] : model.first_col_table()) {
        states.push_back(a);
    }
    return states;
}

std::vector<Rational> table_weights(const QuiverModel& model) {
    std::vector<Rational> w;
    for (const auto& [a, mass] : model.first_col_table()) {
        w.push_back(mass);
    }
    return w;
}

const QuiverModel& require_converged(const QuiverModel& model) {
    if (!model.normalizer().converged) {
        throw NonConvergence("truncated quiver sum failed the Cauchy check; raise the size cap or shrink U");
    }
    return model;
}

}  // namespace

QuiverSampler::QuiverSampler(const QuiverModel& model)
    : vertices_(require_converged(model).quiver().vertices()),
      states_(table_states(model)),
      first_(table_weights(model)) {
    const ColumnVector zero(static_cast<std::size_t>(vertices_), 0);
    for (const auto& a : states_) {
        if (a == zero) {
            continue;
        }
        auto targets = vectors_below(a);
        std::vector<Rational> w;
        w.reserve(targets.size());
        for (const auto& b : targets) {
            w.push_back(model.kernel(a, b));
        }
        rows_.emplace(a, std::make_pair(std::move(targets), ExactDiscreteSampler(std::move(w))));
    }
}

PartitionTuple QuiverSampler::draw(std::uint64_t seed) const {
    RandomStream stream(seed);
    const auto nu = static_cast<std::size_t>(vertices_);
    std::vector<std::vector<int>> cols(nu);
    ColumnVector a = states_[first_.draw(stream.next_uniform())];
    const ColumnVector zero(nu, 0);
    while (a != zero) {
        for (std::size_t i = 0; i < nu; ++i) {
            cols[i].push_back(a[i]);
        }
        const auto& [targets, sampler] = rows_.at(a);
        a = targets[sampler.draw(stream.next_uniform())];
    }
    PartitionTuple out;
    out.reserve(nu);
    for (auto& c : cols) {
        out.push_back(Partition::from_columns(c));
    }
    return out;
}

PartitionTuple quiver_sample(const Quiver& g, const QuiverParams& p, std::uint64_t seed, int size_cap,
                             const Rational& eps) {
    return QuiverSampler(QuiverModel(g, p, size_cap, eps)).draw(seed);
}

}  // namespace qchain
