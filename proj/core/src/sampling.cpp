#include "qchain/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace qchain {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational support_tail_bound() { return dyadic(-64); }

ExactDiscreteSampler::ExactDiscreteSampler(std::vector<Rational> weights) {
    if (weights.empty()) {
        throw std::invalid_argument("sampler needs at least one outcome");
    }
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) {
            throw std::invalid_argument("sampler weights must be non-negative");
        }
        total += w;
    }
    if (total == 0) {
        throw std::invalid_argument("sampler weights sum to zero");
    }
    probabilities_.reserve(weights.size());
    Integer scale = 1;
    scale <<= 128;
    Rational cdf = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        probabilities_.push_back(weights[k] / total);
        cdf += probabilities_.back();
        if (k + 1 < weights.size()) {
            Integer t;
            Integer num = cdf.get_num() * scale;
            mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), cdf.get_den_mpz_t());
            thresholds_.push_back(t);
        }
    }
}

std::size_t ExactDiscreteSampler::draw(const Uniform128& u) const {
    Integer value(static_cast<unsigned long>(u.hi));
    value <<= 64;
    value += static_cast<unsigned long>(u.lo);
    // U < CDF_k  <=>  value < ceil(CDF_k * 2^128) since value is an integer.
    auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), value);
    return static_cast<std::size_t>(it - thresholds_.begin());
}

}  // namespace qchain
