#pragma once

#include "qchain/glchain.hpp"
#include "qchain/qseries.hpp"

#include <optional>
#include <vector>

namespace qchain {

// One Andrews-Gordon identity, truncated at x^order: 2 <= k, 1 <= i <= k.
struct AGSpec {
    int k = 2;
    int i = 2;
    std::size_t order = 60;

    void validate() const;
};

// sum over n_1..n_{k-1} >= 0 of
//   x^{N_1^2 + ... + N_{k-1}^2 + N_i + ... + N_{k-1}} / ((x)_{n_1} ... (x)_{n_{k-1}})
// with N_j = n_j + ... + n_{k-1} and standard Pochhammer symbols. The
// enumeration runs over N_1 >= ... >= N_{k-1} >= 0 and prunes on the
// exponent.
QSeries ag_sum(const AGSpec& spec);

// prod over r >= 1 with r != 0, +-i (mod 2k+1) of 1/(1 - x^r).
QSeries ag_product(const AGSpec& spec);

struct AGResult {
    AGSpec spec;
    bool holds = false;
    std::optional<std::size_t> first_mismatch_order;
};

AGResult verify_ag(const AGSpec& spec);

// True for the (k, i) pairs covered by the absorption-time argument
// (i = 1 and i = k); the remaining cases are checked by series expansion
// only.
bool has_probabilistic_proof(const AGSpec& spec);

// The L -> infinity limit of K^r(L, 0) for the GL chain with x = 1/q and
// u = x^delta (delta = 0 is u = 1, delta = 1 is u = 1/q), as a series in x:
//
//   sum_{n>=0} (-1)^n x^{r n^2 + delta r n + n(n-1)/2} (1 - x^{delta+2n})
//       prod_{s=1}^{n-1} (1 - x^{delta+s}) / prod_{s=1}^{n} (1 - x^s),
//
// with the n = 0 term equal to 1.
QSeries absorption_limit_series(int r, int delta, std::size_t order);

// prod_{s=from}^{order} (1 - x^s) truncated at x^order.
QSeries euler_product(int from, std::size_t order);

class NotABaileyPair : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Sequences alpha_0..alpha_{L_max}, beta_0..beta_{L_max} at fixed (u, q).
// A Bailey pair satisfies
//   beta_L = sum_{r=0}^{L} alpha_r / ((1/q)_{L-r} (u/q)_{L+r}),
// i.e. beta = A alpha for the eigenvector matrix A of the GL chain.
class BaileyPair {
  public:
    BaileyPair(std::vector<Rational> alpha, std::vector<Rational> beta, MeasureParams params);

    // beta computed from alpha by the defining relation.
    static BaileyPair from_alpha(std::vector<Rational> alpha, const MeasureParams& params);
    // beta = (1, 0, 0, ...), alpha = A^{-1} beta.
    static BaileyPair unit(int l_max, const MeasureParams& params);

    const std::vector<Rational>& alpha() const { return alpha_; }
    const std::vector<Rational>& beta() const { return beta_; }
    const MeasureParams& params() const { return params_; }
    int l_max() const { return static_cast<int>(alpha_.size()) - 1; }

  private:
    std::vector<Rational> alpha_;
    std::vector<Rational> beta_;
    MeasureParams params_;
};

std::vector<Rational> bailey_beta_from_alpha(const std::vector<Rational>& alpha, const MeasureParams& p);

bool bailey_check(const BaileyPair& pair);

// alpha'_L = u^L / q^{L^2} alpha_L,
// beta'_L = sum_{r<=L} u^r / (q^{r^2} (1/q)_{L-r}) beta_r.
// Throws NotABaileyPair when the input fails bailey_check.
BaileyPair bailey_step(const BaileyPair& pair);

}  // namespace qchain
