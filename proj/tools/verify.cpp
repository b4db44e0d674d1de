#include "commands.hpp"

#include "qchain/fristedt.hpp"
#include "qchain/identities.hpp"
#include "qchain/theta.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <thread>

namespace qchain::cli {
namespace {

struct Outcome {
    bool pass = true;
    std::optional<std::size_t> mismatch;
};

struct Case {
    Json info;
    std::function<Outcome()> run;
};

Outcome compare(const QSeries& lhs, QSeries rhs, bool fault) {
    if (fault) {
        rhs.add_to(rhs.order() / 2, Rational(1));
    }
    Outcome o;
    o.mismatch = first_mismatch(lhs, rhs);
    o.pass = !o.mismatch.has_value();
    return o;
}

Outcome from_bool(bool ok) { return {ok, std::nullopt}; }

std::size_t order_or(int order, std::size_t fallback) {
    return order > 0 ? static_cast<std::size_t>(order) : fallback;
}

void add_ag_cases(std::vector<Case>& cases, const std::string& suite, int k, std::size_t order, bool fault) {
    for (int i = 1; i <= k; ++i) {
        const AGSpec spec{k, i, order};
        Json info{{"suite", suite}, {"k", k}, {"i", i}, {"N", order}};
        info["proof"] = has_probabilistic_proof(spec) ? "probabilistic" : "engine-verified";
        cases.push_back({info, [spec, fault] { return compare(ag_sum(spec), ag_product(spec), fault); }});
    }
}

void add_pipeline_cases(std::vector<Case>& cases, int k, std::size_t order, bool fault) {
    const Json base{{"suite", "pipeline"}, {"k", k}, {"N", order}};
    auto with = [&](const char* route) {
        Json j = base;
        j["route"] = route;
        return j;
    };
    cases.push_back({with("u=1"), [=] {
                         return compare(absorption_limit_series(k, 0, order),
                                        euler_product(1, order) * ag_sum({k, k, order}), fault);
                     }});
    cases.push_back({with("u=1/q"), [=] {
                         return compare(absorption_limit_series(k, 1, order),
                                        euler_product(2, order) * ag_sum({k, 1, order}), fault);
                     }});
    cases.push_back({with("theta"), [=] {
                         return compare(absorption_limit_series(k, 0, order).to_y(),
                                        theta_sum(2 * k + 1, 1, 2 * order), fault);
                     }});
    cases.push_back({with("jacobi"), [=] {
                         return compare(theta_sum(2 * k + 1, 1, 2 * order), jacobi_product(1, 2 * k + 1, 2 * order),
                                        fault);
                     }});
}

void add_qbinomial_cases(std::vector<Case>& cases) {
    for (const char* qs : {"1/2", "1/3", "2/5"}) {
        const Rational q = parse_rational(qs);
        cases.push_back({Json{{"suite", "qbinomial"}, {"q", qs}, {"N", 12}}, [q] {
                             bool ok = true;
                             for (int n = 0; n <= 12; ++n) {
                                 ok = ok && q_binomial_check(n, q);
                             }
                             return from_bool(ok);
                         }});
    }
}

void add_jacobi_cases(std::vector<Case>& cases, std::size_t order, bool fault) {
    for (long b : {1L, 3L}) {
        cases.push_back({Json{{"suite", "jacobi"}, {"A", 5}, {"B", b}, {"N", order}},
                         [=] { return compare(theta_sum(5, b, order), jacobi_product(b, 5, order), fault); }});
    }
}

void add_bailey_cases(std::vector<Case>& cases, std::uint64_t seed) {
    const MeasureParams p(make_rational(2), make_rational(1, 2));
    const int l_max = 15;
    const Json base{{"suite", "bailey"}, {"q", "2"}, {"u", "1/2"}, {"N", l_max}};
    Json unit_info = base;
    unit_info["case"] = "unit";
    cases.push_back({unit_info, [=] {
                         const BaileyPair unit = BaileyPair::unit(l_max, p);
                         return from_bool(bailey_check(unit) && bailey_check(bailey_step(unit)));
                     }});
    Json random_info = base;
    random_info["case"] = "random";
    random_info["pairs"] = 50;
    cases.push_back({random_info, [=] {
                         std::mt19937_64 gen(seed);
                         std::uniform_int_distribution<long> num(-20, 20);
                         std::uniform_int_distribution<long> den(1, 20);
                         const auto d = build_diagonalization(l_max, p);
                         bool ok = true;
                         for (int t = 0; t < 50 && ok; ++t) {
                             std::vector<Rational> alpha;
                             for (int i = 0; i <= l_max; ++i) {
                                 alpha.push_back(make_rational(num(gen), den(gen)));
                             }
                             const BaileyPair pair = BaileyPair::from_alpha(alpha, p);
                             const BaileyPair next = bailey_step(pair);
                             ok = bailey_check(pair) && bailey_check(next) &&
                                  d.M.apply(pair.beta()) == d.A.apply(next.alpha());
                         }
                         return from_bool(ok);
                     }});
}

void add_diag_cases(std::vector<Case>& cases) {
    for (const auto& [qs, us] : std::vector<std::pair<const char*, const char*>>{{"2", "1/2"}, {"3", "1/3"}, {"5/2", "2/5"}}) {
        const MeasureParams p(parse_rational(qs), parse_rational(us));
        cases.push_back({Json{{"suite", "diag"}, {"model", "gl"}, {"q", qs}, {"u", us}, {"N", 29}}, [p] {
                             const auto d = build_diagonalization(29, p);
                             return from_bool(d.A * d.Ainv == TruncatedMatrix::identity(30) && d.M * d.A == d.A * d.E &&
                                              kernel_matrix(29, p) == d.C * d.M * d.c_inverse());
                         }});
    }
    cases.push_back({Json{{"suite", "diag"}, {"model", "gl"}, {"case", "powers"}, {"q", "2"}, {"u", "1/2"}, {"N", 20}}, [] {
                         const MeasureParams p(make_rational(2), make_rational(1, 2));
                         const auto k = kernel_matrix(20, p);
                         auto power = k;
                         bool ok = true;
                         for (int r = 1; r <= 8; ++r) {
                             for (int big_l = 0; big_l <= 20; ++big_l) {
                                 for (int j = 0; j <= big_l; ++j) {
                                     ok = ok && kr_closed(big_l, j, r, p) ==
                                                    power(static_cast<std::size_t>(big_l), static_cast<std::size_t>(j));
                                 }
                             }
                             power = power * k;
                         }
                         return from_bool(ok);
                     }});
    for (const char* qs : {"1/2", "1/3"}) {
        const FristedtParams p(parse_rational(qs));
        cases.push_back({Json{{"suite", "diag"}, {"model", "fristedt"}, {"q", qs}, {"N", 20}}, [p] {
                             const auto d = f_diagonalization(20, p);
                             const auto k = f_kernel_matrix(20, p);
                             bool ok = d.A * d.Ainv == TruncatedMatrix::identity(21) && d.M * d.A == d.A * d.E &&
                                       k == d.C * d.M * d.c_inverse();
                             auto power = k;
                             for (int r = 1; r <= 8; ++r) {
                                 for (int big_l = 0; big_l <= 20; ++big_l) {
                                     for (int j = 0; j <= big_l; ++j) {
                                         ok = ok && f_kr_closed(big_l, j, r, p) ==
                                                        power(static_cast<std::size_t>(big_l), static_cast<std::size_t>(j));
                                     }
                                 }
                                 power = power * k;
                             }
                             return from_bool(ok);
                         }});
    }
}

std::vector<int> ks_for(const VerifyOptions& opt, int lo, int hi) {
    if (opt.k > 0) {
        return {opt.k};
    }
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) {
        ks.push_back(k);
    }
    return ks;
}

std::vector<Case> build_cases(const VerifyOptions& opt) {
    std::vector<Case> cases;
    const bool all = opt.suite == "all";
    if (all || opt.suite == "rr") {
        add_ag_cases(cases, "rr", 2, order_or(opt.order, 60), opt.inject_fault);
    }
    if (all || opt.suite == "ag") {
        for (int k : ks_for(opt, 2, 5)) {
            add_ag_cases(cases, "ag", k, order_or(opt.order, 40), opt.inject_fault);
        }
    }
    if (all || opt.suite == "pipeline") {
        for (int k : ks_for(opt, 2, 4)) {
            add_pipeline_cases(cases, k, order_or(opt.order, 60), opt.inject_fault);
        }
    }
    if (all || opt.suite == "qbinomial") {
        add_qbinomial_cases(cases);
    }
    if (all || opt.suite == "jacobi") {
        add_jacobi_cases(cases, order_or(opt.order, 200), opt.inject_fault);
    }
    if (all || opt.suite == "bailey") {
        add_bailey_cases(cases, opt.seed);
    }
    if (all || opt.suite == "diag") {
        add_diag_cases(cases);
    }
    return cases;
}

}  // namespace

int run_verify(const VerifyOptions& opt) {
    std::vector<Case> cases = build_cases(opt);
    std::vector<Outcome> outcomes(cases.size());
    std::vector<double> elapsed(cases.size(), 0.0);
    std::vector<std::string> errors(cases.size());

    unsigned jobs = opt.jobs > 0 ? opt.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < cases.size(); idx = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                outcomes[idx] = cases[idx].run();
            } catch (const std::exception& e) {
                outcomes[idx].pass = false;
                errors[idx] = e.what();
            }
            elapsed[idx] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }

    std::size_t passed = 0;
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        Json line = cases[idx].info;
        line["status"] = outcomes[idx].pass ? "pass" : "fail";
        if (outcomes[idx].mismatch) {
            line["first_mismatch_order"] = *outcomes[idx].mismatch;
        }
        if (!errors[idx].empty()) {
            line["error"] = errors[idx];
        }
        if (opt.timing) {
            line["elapsed"] = elapsed[idx];
        }
        emit(std::cout, line);
        passed += outcomes[idx].pass ? 1 : 0;
    }
    std::cerr << "verify: " << passed << "/" << cases.size() << " cases passed\n";
    return passed == cases.size() ? kPass : kCheckFailed;
}

}  // namespace qchain::cli
