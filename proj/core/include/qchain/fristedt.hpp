#pragma once

// The geometric-weight measure q^{|lambda|} prod_{i>=1} (1 - q^i), 0 < q < 1,
// generated row by row: if lambda_i = a then lambda_{i+1} = b with
// probability q^b (q)_a / (q)_b. Pochhammer symbols are standard,
// (x)_n = (1 - x)...(1 - x^n); (1/q)_m means that symbol at x = 1/q.

#include "qchain/glchain.hpp"
#include "qchain/sampling.hpp"

namespace qchain {

class FristedtParams {
  public:
    explicit FristedtParams(Rational q);
    const Rational& q() const { return q_; }

  private:
    Rational q_;
};

// q^{|lambda|}; the normalizer prod (1 - q^i) is fristedt_normalizer().
Rational uniform_mass(const Partition& lambda, const FristedtParams& p);

// Certified enclosure of (q)_infinity = prod_{i>=1} (1 - q^i).
Enclosure fristedt_normalizer(const FristedtParams& p, const Rational& eps);

Rational f_kernel(int a, int b, const FristedtParams& p);

TruncatedMatrix f_kernel_matrix(int l_max, const FristedtParams& p);

// C = diag((q)_i / q^i), M(i,j) = q^i for i >= j, E = diag(q^i),
// A(i,j) = (-1)^{i-j} / (q^{C(i-j,2)} (1/q)_{i-j}), A^{-1}(i,j) = 1/(1/q)_{i-j}.
Diagonalization f_diagonalization(int l_max, const FristedtParams& p);

// K^r(L,j) = q^j q^{L(r-1)} (q)_L (1/q)_{L-j+r-1} / ((q)_j (1/q)_{L-j} (1/q)_{r-1}).
Rational f_kr_closed(int big_l, int j, int r, const FristedtParams& p);

// Limit law of the r-th row: (q)_inf q^{rj} / ((q)_j (q)_{r-1}).
Enclosure row_law_limit(int r, int j, const FristedtParams& p, const Rational& eps);

// Exact part q^a / (q)_a of the first-row law lim_L K(L, a).
Rational f_first_row_ratio(int a, const FristedtParams& p);

// First-row ratio times the kernel steps down to 0. Equals q^{|lambda|}.
Rational f_chain_mass(const Partition& lambda, const FristedtParams& p);

class FristedtSampler {
  public:
    explicit FristedtSampler(const FristedtParams& p);

    int support_cap() const { return static_cast<int>(first_.size()) - 1; }
    ChainSample draw(std::uint64_t seed) const;

  private:
    FristedtParams params_;
    ExactDiscreteSampler first_;
    std::vector<ExactDiscreteSampler> rows_;
};

ChainSample f_sample(const FristedtParams& p, std::uint64_t seed);

}  // namespace qchain
