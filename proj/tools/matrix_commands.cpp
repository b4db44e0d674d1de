#include "commands.hpp"

#include "qchain/fristedt.hpp"

#include <iostream>

namespace qchain::cli {
namespace {

MeasureParams gl_params(const std::string& q, const std::string& u) {
    return MeasureParams(parse_option_rational(q.empty() ? "2" : q, "--q"), parse_option_rational(u, "--u"));
}

FristedtParams fristedt_params(const std::string& q) {
    return FristedtParams(parse_option_rational(q.empty() ? "1/2" : q, "--q"));
}

const TruncatedMatrix& pick(const Diagonalization& d, const std::string& name) {
    if (name == "C") {
        return d.C;
    }
    if (name == "M") {
        return d.M;
    }
    if (name == "A") {
        return d.A;
    }
    if (name == "Ainv") {
        return d.Ainv;
    }
    return d.E;
}

}  // namespace

int run_power(const PowerOptions& opt) {
    if (opt.j > opt.big_l) {
        throw UsageError("power needs 0 <= j <= L");
    }
    Rational closed;
    TruncatedMatrix k;
    Json params;
    if (opt.model == "gl") {
        const MeasureParams p = gl_params(opt.q, opt.u);
        closed = kr_closed(opt.big_l, opt.j, opt.r, p);
        k = kernel_matrix(opt.big_l, p);
        params = Json{{"q", to_string(p.q())}, {"u", to_string(p.u())}};
    } else {
        const FristedtParams p = fristedt_params(opt.q);
        closed = f_kr_closed(opt.big_l, opt.j, opt.r, p);
        k = f_kernel_matrix(opt.big_l, p);
        params = Json{{"q", to_string(p.q())}};
    }
    const Rational matrix = k.power(static_cast<unsigned>(opt.r))(static_cast<std::size_t>(opt.big_l), static_cast<std::size_t>(opt.j));
    const bool equal = closed == matrix;
    emit(std::cout, Json{{"model", opt.model},
                         {"params", params},
                         {"L", opt.big_l},
                         {"j", opt.j},
                         {"r", opt.r},
                         {"closed", to_string(closed)},
                         {"matrix", to_string(matrix)},
                         {"equal", equal}});
    return equal ? kPass : kCheckFailed;
}

int run_kernel(const KernelOptions& opt) {
    if (opt.model == "gl") {
        const MeasureParams p = gl_params(opt.q, opt.u);
        const Json params{{"q", to_string(p.q())}, {"u", to_string(p.u())}};
        if (opt.matrix == "K") {
            emit(std::cout, matrix_to_json(kernel_matrix(opt.l_max, p), "gl", "K", params));
        } else {
            emit(std::cout, matrix_to_json(pick(build_diagonalization(opt.l_max, p), opt.matrix), "gl", opt.matrix, params));
        }
        return kPass;
    }
    const FristedtParams p = fristedt_params(opt.q);
    const Json params{{"q", to_string(p.q())}};
    if (opt.matrix == "K") {
        emit(std::cout, matrix_to_json(f_kernel_matrix(opt.l_max, p), "fristedt", "K", params));
    } else {
        emit(std::cout, matrix_to_json(pick(f_diagonalization(opt.l_max, p), opt.matrix), "fristedt", opt.matrix, params));
    }
    return kPass;
}

}  // namespace qchain::cli
