#include "commands.hpp"

#include "qchain/identities.hpp"

#include <iostream>
#include <sstream>

namespace qchain::cli {
namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_option_rational(item, "--alpha"));
    }
    return out;
}

}  // namespace

int run_bailey(const BaileyOptions& opt) {
    const MeasureParams p(parse_option_rational(opt.q, "--q"), parse_option_rational(opt.u, "--u"));
    BaileyPair pair = BaileyPair::unit(opt.l_max, p);
    if (!opt.alpha.empty()) {
        std::vector<Rational> alpha = parse_list(opt.alpha);
        if (static_cast<int>(alpha.size()) != opt.l_max + 1) {
            throw UsageError("--alpha needs L_max + 1 entries");
        }
        pair = BaileyPair::from_alpha(std::move(alpha), p);
    }
    bool ok = true;
    for (int step = 0; step <= opt.steps; ++step) {
        if (step > 0) {
            pair = bailey_step(pair);
        }
        const bool holds = bailey_check(pair);
        ok = ok && holds;
        emit(std::cout, Json{{"step", step}, {"alpha", rationals(pair.alpha())}, {"beta", rationals(pair.beta())},
                             {"bailey_pair", holds}});
    }
    return ok ? kPass : kCheckFailed;
}

int run_series(const SeriesOptions& opt) {
    const auto order = static_cast<std::size_t>(opt.order);
    Json out;
    if (opt.kind == "absorption") {
        out = to_json(absorption_limit_series(opt.r, opt.delta, order));
        out["r"] = opt.r;
        out["delta"] = opt.delta;
    } else {
        if (opt.i > opt.k) {
            throw UsageError("series needs 1 <= i <= k");
        }
        const AGSpec spec{opt.k, opt.i, order};
        out = to_json(opt.kind == "ag-sum" ? ag_sum(spec) : ag_product(spec));
        out["k"] = opt.k;
        out["i"] = opt.i;
    }
    out["kind"] = opt.kind;
    emit(std::cout, out);
    return kPass;
}

}  // namespace qchain::cli
