#include "commands.hpp"

#include <iostream>

namespace qchain::cli {

Rational parse_option_rational(const std::string& text, const std::string& option) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(option + " expects a rational \"p/q\", got '" + text + "'");
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace qchain::cli

int main(int argc, char** argv) {
    using namespace qchain::cli;

    CLI::App app{"Exact partition measures, absorbing chains and q-series identities"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run an identity verification battery");
    cmd_verify->add_option("--suite", verify.suite, "rr | ag | pipeline | qbinomial | jacobi | bailey | diag | all")
        ->check(CLI::IsMember({"rr", "ag", "pipeline", "qbinomial", "jacobi", "bailey", "diag", "all"}));
    cmd_verify->add_option("--k", verify.k, "Restrict ag/pipeline to one k")->check(CLI::Range(2, 12));
    cmd_verify->add_option("--order", verify.order, "Truncation order")->check(CLI::Range(0, 2000));
    cmd_verify->add_flag("--inject-fault", verify.inject_fault, "Perturb one product coefficient");
    cmd_verify->add_flag("!--no-timing", verify.timing, "Omit elapsed times from the report");
    cmd_verify->add_option("--jobs", verify.jobs, "Worker threads");
    cmd_verify->add_option("--seed", verify.seed, "Seed for the random Bailey pairs");

    SampleOptions sample;
    auto* cmd_sample = app.add_subcommand("sample", "Draw random partitions from a chain");
    cmd_sample->add_option("--model", sample.model, "gl | fristedt | quiver")
        ->check(CLI::IsMember({"gl", "fristedt", "quiver"}));
    cmd_sample->add_option("--q", sample.q, "q as p/q (gl: q > 1, fristedt: 0 < q < 1)");
    cmd_sample->add_option("--u", sample.u, "u as p/q, 0 < u < 1 (gl)");
    cmd_sample->add_option("--quiver", sample.quiver_file, "Quiver JSON file (quiver model)");
    cmd_sample->add_option("--count", sample.count, "Number of samples")->check(CLI::Range(0, 100000000));
    cmd_sample->add_option("--seed", sample.seed, "Base seed");
    cmd_sample->add_option("--size-cap", sample.size_cap, "Truncation size for the quiver sums")
        ->check(CLI::Range(1, 60));
    cmd_sample->add_option("--eps", sample.eps, "Cauchy tolerance for the quiver sums");
    cmd_sample->add_flag("--summary", sample.summary, "Print one summary line instead of samples");

    PowerOptions power;
    auto* cmd_power = app.add_subcommand("power", "Closed-form K^r(L, j) against the matrix power");
    cmd_power->add_option("--model", power.model, "gl | fristedt")->check(CLI::IsMember({"gl", "fristedt"}));
    cmd_power->add_option("--q", power.q, "q as p/q");
    cmd_power->add_option("--u", power.u, "u as p/q (gl)");
    cmd_power->add_option("--L", power.big_l, "Start state L")->check(CLI::Range(0, 200));
    cmd_power->add_option("--j", power.j, "Target state j")->check(CLI::Range(0, 200));
    cmd_power->add_option("--r", power.r, "Number of steps")->check(CLI::Range(1, 200));

    KernelOptions kernel;
    auto* cmd_kernel = app.add_subcommand("kernel", "Dump a truncated matrix as JSON");
    cmd_kernel->add_option("--model", kernel.model, "gl | fristedt")->check(CLI::IsMember({"gl", "fristedt"}));
    cmd_kernel->add_option("--q", kernel.q, "q as p/q");
    cmd_kernel->add_option("--u", kernel.u, "u as p/q (gl)");
    cmd_kernel->add_option("--L-max", kernel.l_max, "Largest state")->check(CLI::Range(0, 200));
    cmd_kernel->add_option("--matrix", kernel.matrix, "K | C | M | A | Ainv | E")
        ->check(CLI::IsMember({"K", "C", "M", "A", "Ainv", "E"}));

    BaileyOptions bailey;
    auto* cmd_bailey = app.add_subcommand("bailey", "Iterate the Bailey step on a pair");
    cmd_bailey->add_option("--q", bailey.q, "q as p/q");
    cmd_bailey->add_option("--u", bailey.u, "u as p/q");
    cmd_bailey->add_option("--L-max", bailey.l_max, "Largest index")->check(CLI::Range(0, 200));
    cmd_bailey->add_option("--steps", bailey.steps, "Number of steps")->check(CLI::Range(0, 100));
    cmd_bailey->add_option("--alpha", bailey.alpha, "Comma-separated alpha; default is the unit pair");

    SeriesOptions series;
    auto* cmd_series = app.add_subcommand("series", "Print a truncated series");
    cmd_series->add_option("--kind", series.kind, "ag-sum | ag-product | absorption")
        ->check(CLI::IsMember({"ag-sum", "ag-product", "absorption"}));
    cmd_series->add_option("--k", series.k, "Andrews-Gordon k")->check(CLI::Range(2, 12));
    cmd_series->add_option("--i", series.i, "Andrews-Gordon i")->check(CLI::Range(1, 12));
    cmd_series->add_option("--r", series.r, "Steps r (absorption)")->check(CLI::Range(1, 100));
    cmd_series->add_option("--delta", series.delta, "u = x^delta (absorption)")->check(CLI::Range(0, 1));
    cmd_series->add_option("--order", series.order, "Truncation order")->check(CLI::Range(0, 2000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cmd_verify) {
            return run_verify(verify);
        }
        if (*cmd_sample) {
            return run_sample(sample);
        }
        if (*cmd_power) {
            return run_power(power);
        }
        if (*cmd_kernel) {
            return run_kernel(kernel);
        }
        if (*cmd_bailey) {
            return run_bailey(bailey);
        }
        if (*cmd_series) {
            return run_series(series);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const qchain::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const qchain::NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
