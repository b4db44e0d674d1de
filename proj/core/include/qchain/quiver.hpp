#pragma once

// Measures on n-tuples of partitions attached to a graph with edge
// multiplicities f_ij (loops allowed). A tuple (lambda(1), ..., lambda(n))
// has weight
//
//   prod_{i<=j} q^{f_ij <lambda(i), lambda(j)>} prod_i U_i^{|lambda(i)|}
//   / prod_i (q^{<lambda(i), lambda(i)>} b_{lambda(i)}),
//
// with <lambda, mu> = sum_c lambda'_c mu'_c and b_lambda = prod_i (1/q)_{m_i}.
// The weight factorizes over columns, which gives a Markov chain on the
// vector of column heights.

#include "qchain/partition.hpp"
#include "qchain/rational.hpp"
#include "qchain/sampling.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace qchain {

class Quiver {
  public:
    // `multiplicity` is an n x n symmetric matrix of edge counts.
    explicit Quiver(std::vector<std::vector<int>> multiplicity);

    struct Edge {
        int from;  // 1-based
        int to;    // 1-based
        int count;
    };
    static Quiver from_edges(int n, const std::vector<Edge>& edges);

    static Quiver single_point();
    static Quiver jordan();  // one vertex, one loop
    static Quiver a2();      // two vertices, one edge

    int vertices() const { return static_cast<int>(f_.size()); }
    // 0-based vertex indices.
    int edges(int i, int j) const { return f_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
    bool is_connected() const;

  private:
    std::vector<std::vector<int>> f_;
};

class QuiverParams {
  public:
    QuiverParams(Rational q, std::vector<Rational> u);
    const Rational& q() const { return q_; }
    const std::vector<Rational>& u() const { return u_; }

  private:
    Rational q_;
    std::vector<Rational> u_;
};

using PartitionTuple = std::vector<Partition>;
using ColumnVector = std::vector<int>;

// <lambda, mu> = sum_{i>=1} lambda'_i mu'_i.
long pairing(const Partition& lambda, const Partition& mu);

// b_lambda = prod_i (1/q)_{m_i(lambda)}.
Rational b_lambda(const Partition& lambda, const Rational& q);

Rational tuple_weight(const PartitionTuple& t, const Quiver& g, const QuiverParams& p);

// Column factor prod_{i<=j} q^{f_ij a_i a_j} prod_i U_i^{a_i} / q^{a_i^2}.
Rational column_weight(const ColumnVector& a, const Quiver& g, const QuiverParams& p);

// M(a, b) = column_weight(a) / prod_i (1/q)_{a_i - b_i}; zero unless b <= a.
Rational quiver_m(const ColumnVector& a, const ColumnVector& b, const Quiver& g, const QuiverParams& p);

// Truncated sum over all tuples of total size <= size_cap. Not certified:
// the tail estimate extrapolates the last two size shells geometrically.
struct TruncatedSum {
    Rational value;
    Rational last_shell;     // contribution of tuples of total size == size_cap
    Rational tail_estimate;  // heuristic bound on the omitted mass
    int size_cap = 0;
    bool converged = false;  // |last_shell| <= eps
};

class NonConvergence : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Every tuple of total size <= size_cap, enumerated once; holds the
// normalizer and the first-column masses P(a).
class QuiverModel {
  public:
    QuiverModel(Quiver g, QuiverParams p, int size_cap, const Rational& eps);

    const Quiver& quiver() const { return g_; }
    const QuiverParams& params() const { return p_; }
    const TruncatedSum& normalizer() const { return normalizer_; }
    std::size_t tuple_count() const { return tuple_count_; }

    // Truncated, unnormalized P(a): weight of tuples whose i-th component
    // has a_i parts. P(0,...,0) = 1.
    Rational first_cols(const ColumnVector& a) const;
    const std::map<ColumnVector, Rational>& first_col_table() const { return first_cols_; }

    // M(a, b) P(b) / P(a).
    Rational kernel(const ColumnVector& a, const ColumnVector& b) const;

    // P(a_1) K(a_1, a_2) ... K(a_last, 0) over the column vectors of t.
    Rational chain_mass(const PartitionTuple& t) const;

  private:
    Quiver g_;
    QuiverParams p_;
    TruncatedSum normalizer_;
    std::size_t tuple_count_ = 0;
    std::map<ColumnVector, Rational> first_cols_;
};

// All b with 0 <= b <= a componentwise, in lexicographic order.
std::vector<ColumnVector> vectors_below(const ColumnVector& a);

// Column vectors of a tuple: entry c holds (lambda(1)'_c, ..., lambda(n)'_c).
std::vector<ColumnVector> column_vectors(const PartitionTuple& t);

TruncatedSum normalizer(const Quiver& g, const QuiverParams& p, int size_cap, const Rational& eps);
Rational quiver_first_cols(const ColumnVector& a, const Quiver& g, const QuiverParams& p, int size_cap);
Rational quiver_kernel(const ColumnVector& a, const ColumnVector& b, const Quiver& g, const QuiverParams& p,
                       int size_cap);

// Runs the column chain: the first column vector is drawn from the
// truncated P table (normalized), later ones from the kernel rows
// (normalized, since truncation leaves row sums slightly off 1).
class QuiverSampler {
  public:
    // Throws NonConvergence when the model's truncated sum failed the
    // Cauchy check.
    explicit QuiverSampler(const QuiverModel& model);

    PartitionTuple draw(std::uint64_t seed) const;

  private:
    int vertices_;
    std::vector<ColumnVector> states_;
    ExactDiscreteSampler first_;
    std::map<ColumnVector, std::pair<std::vector<ColumnVector>, ExactDiscreteSampler>> rows_;
};

PartitionTuple quiver_sample(const Quiver& g, const QuiverParams& p, std::uint64_t seed, int size_cap,
                             const Rational& eps);

}  // namespace qchain
