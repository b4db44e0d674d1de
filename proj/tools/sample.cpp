#include "commands.hpp"

#include "qchain/fristedt.hpp"

#include <cmath>
#include <iostream>

namespace qchain::cli {
namespace {

constexpr double kSigmaBound = 4.0;

Json frequency_entry(int hits, int count, double expected) {
    const double observed = count > 0 ? hits / static_cast<double>(count) : 0.0;
    const double sigma = count > 0 ? std::sqrt(expected * (1 - expected) / count) : 0.0;
    return Json{{"observed", observed},
                {"expected", expected},
                {"within_4_sigma", std::abs(observed - expected) <= kSigmaBound * sigma}};
}

int sample_gl(const SampleOptions& opt) {
    const MeasureParams p(parse_option_rational(opt.q.empty() ? "2" : opt.q, "--q"), parse_option_rational(opt.u, "--u"));
    if (!p.is_probability()) {
        throw UsageError("sampling needs u < 1");
    }
    const GlSampler sampler(p);
    std::vector<int> hits(6, 0);
    for (int n = 0; n < opt.count; ++n) {
        const ChainSample s = sampler.draw(derive_seed(opt.seed, static_cast<std::uint64_t>(n)));
        if (opt.summary) {
            const int first = s.sequence.empty() ? 0 : s.sequence.front();
            if (first < static_cast<int>(hits.size())) {
                ++hits[static_cast<std::size_t>(first)];
            }
        } else {
            emit(std::cout, gl_sample_to_json(s));
        }
    }
    if (!opt.summary) {
        return kPass;
    }
    const Enclosure z = measure_prefactor(p, dyadic(-60));
    Json rows = Json::array();
    bool ok = true;
    for (std::size_t a = 0; a < hits.size(); ++a) {
        Json e = frequency_entry(hits[a], opt.count, to_double(first_col_ratio(static_cast<int>(a), p) * z.midpoint()));
        e["a"] = a;
        ok = ok && e["within_4_sigma"].get<bool>();
        rows.push_back(e);
    }
    emit(std::cout, Json{{"model", "gl"}, {"count", opt.count}, {"seed", opt.seed}, {"first_column", rows}});
    return ok ? kPass : kCheckFailed;
}

int sample_fristedt(const SampleOptions& opt) {
    const FristedtParams p(parse_option_rational(opt.q.empty() ? "1/2" : opt.q, "--q"));
    const FristedtSampler sampler(p);
    int empty = 0;
    for (int n = 0; n < opt.count; ++n) {
        const ChainSample s = sampler.draw(derive_seed(opt.seed, static_cast<std::uint64_t>(n)));
        if (opt.summary) {
            empty += s.partition.empty() ? 1 : 0;
        } else {
            emit(std::cout, fristedt_sample_to_json(s));
        }
    }
    if (!opt.summary) {
        return kPass;
    }
    const Json e = frequency_entry(empty, opt.count, to_double(fristedt_normalizer(p, dyadic(-60)).midpoint()));
    emit(std::cout, Json{{"model", "fristedt"}, {"count", opt.count}, {"seed", opt.seed}, {"empty", e}});
    return e["within_4_sigma"].get<bool>() ? kPass : kCheckFailed;
}

int sample_quiver(const SampleOptions& opt) {
    if (opt.quiver_file.empty()) {
        throw UsageError("--model quiver needs --quiver FILE");
    }
    const QuiverInput in = load_quiver_file(opt.quiver_file);
    if (!in.quiver.is_connected()) {
        std::cerr << "warning: quiver is not connected\n";
    }
    const QuiverModel model(in.quiver, in.params, opt.size_cap, parse_option_rational(opt.eps, "--eps"));
    const QuiverSampler sampler(model);
    int empty = 0;
    for (int n = 0; n < opt.count; ++n) {
        const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(n));
        const PartitionTuple t = sampler.draw(seed);
        if (opt.summary) {
            bool all_empty = true;
            for (const auto& lambda : t) {
                all_empty = all_empty && lambda.empty();
            }
            empty += all_empty ? 1 : 0;
        } else {
            emit(std::cout, tuple_to_json(t, seed));
        }
    }
    if (!opt.summary) {
        return kPass;
    }
    // P(0) = 1, so the all-empty probability is 1 / normalizer.
    const Json e = frequency_entry(empty, opt.count, to_double(1 / model.normalizer().value));
    emit(std::cout, Json{{"model", "quiver"},
                         {"count", opt.count},
                         {"seed", opt.seed},
                         {"empty", e},
                         {"normalizer_certified", false}});
    return e["within_4_sigma"].get<bool>() ? kPass : kCheckFailed;
}

}  // namespace

int run_sample(const SampleOptions& opt) {
    if (opt.model == "gl") {
        return sample_gl(opt);
    }
    if (opt.model == "fristedt") {
        return sample_fristedt(opt);
    }
    return sample_quiver(opt);
}

}  // namespace qchain::cli
