#pragma once

#include "qchain/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qchain::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Invalid option values and combinations; reported with exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Rational parse_option_rational(const std::string& text, const std::string& option);

// One compact JSON document per line.
void emit(std::ostream& out, const Json& j);

struct VerifyOptions {
    std::string suite = "all";
    int k = 0;  // 0: every k the suite covers
    int order = 0;  // 0: per-suite default
    bool inject_fault = false;
    bool timing = true;
    unsigned jobs = 0;  // 0: hardware concurrency
    std::uint64_t seed = 1;
};

struct SampleOptions {
    std::string model = "gl";
    std::string q;
    std::string u = "1/2";
    std::string quiver_file;
    int count = 1;
    std::uint64_t seed = 0;
    int size_cap = 20;
    std::string eps = "1/100000000";
    bool summary = false;
};

struct PowerOptions {
    std::string model = "gl";
    std::string q;
    std::string u = "1/2";
    int big_l = 0;
    int j = 0;
    int r = 1;
};

struct KernelOptions {
    std::string model = "gl";
    std::string q;
    std::string u = "1/2";
    int l_max = 5;
    std::string matrix = "K";
};

struct BaileyOptions {
    std::string q = "2";
    std::string u = "1/2";
    int l_max = 15;
    int steps = 1;
    std::string alpha;  // comma-separated; empty selects the unit pair
};

struct SeriesOptions {
    std::string kind = "ag-sum";
    int k = 2;
    int i = 2;
    int r = 2;
    int delta = 0;
    int order = 20;
};

int run_verify(const VerifyOptions& opt);
int run_sample(const SampleOptions& opt);
int run_power(const PowerOptions& opt);
int run_kernel(const KernelOptions& opt);
int run_bailey(const BaileyOptions& opt);
int run_series(const SeriesOptions& opt);

}  // namespace qchain::cli
