#pragma once

#include "qchain/partition.hpp"
#include "qchain/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qchain {

// A uniform draw U = (hi * 2^64 + lo) / 2^128 in [0, 1).
struct Uniform128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
};

// splitmix64 finalizer; used to derive independent per-sample seeds from a
// base seed and an index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
    Uniform128 next_uniform() {
        Uniform128 u;
        u.hi = engine_();
        u.lo = engine_();
        return u;
    }

  private:
    std::mt19937_64 engine_;
};

// Target bound on the probability mass dropped when an infinite support is
// cut to a finite prefix before sampling.
Rational support_tail_bound();  // 2^-64

// Samples index k with probability w_k / sum(w). The 128-bit dyadic
// uniform is compared exactly against the rational CDF, so the only
// deviation from the target law is the 2^-128 grid of the uniform.
class ExactDiscreteSampler {
  public:
    explicit ExactDiscreteSampler(std::vector<Rational> weights);

    std::size_t size() const { return probabilities_.size(); }
    const Rational& probability(std::size_t k) const { return probabilities_.at(k); }
    std::size_t draw(const Uniform128& u) const;

  private:
    std::vector<Rational> probabilities_;
    std::vector<Integer> thresholds_;  // ceil(CDF_k * 2^128), k < size-1
};

// Output of the column (GL) and row (Fristedt) chains. `sequence` is the
// walk of the chain with the terminal 0 dropped.
struct ChainSample {
    std::uint64_t seed = 0;
    std::vector<int> sequence;
    Partition partition;
};

}  // namespace qchain
