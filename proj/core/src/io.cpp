#include "qchain/io.hpp"

#include <fstream>

namespace qchain {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw FormatError("expected a rational string");
}

Json to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(to_string(c));
    }
    return Json{{"variable", variable_name(s.variable())}, {"order", s.order()}, {"coefficients", coeffs}};
}

QSeries qseries_from_json(const Json& j) {
    try {
        const auto var = j.at("variable").get<std::string>();
        if (var != "x" && var != "y") {
            throw FormatError("series variable must be x or y");
        }
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coefficients")) {
            coeffs.push_back(rational_from_json(c));
        }
        if (coeffs.size() != j.at("order").get<std::size_t>() + 1) {
            throw FormatError("series order does not match coefficient count");
        }
        return QSeries(std::move(coeffs), var == "x" ? Variable::x : Variable::y);
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Partition partition_from_json(const Json& j) {
    try {
        return Partition(j.get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

Json matrix_to_json(const TruncatedMatrix& m, const std::string& model, const std::string& name,
                    const Json& params) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            entries.push_back(to_string(m(i, j)));
        }
    }
    return Json{{"model", model}, {"matrix", name}, {"size", m.dim()}, {"params", params}, {"entries", entries}};
}

TruncatedMatrix matrix_from_json(const Json& j) {
    try {
        const auto n = j.at("size").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (entries.size() != n * n) {
            throw FormatError("matrix entry count does not match size");
        }
        TruncatedMatrix m(n);
        for (std::size_t k = 0; k < n * n; ++k) {
            m(k / n, k % n) = rational_from_json(entries[k]);
        }
        return m;
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    }
}

Json gl_sample_to_json(const ChainSample& s) {
    return Json{{"seed", s.seed}, {"columns", s.sequence}, {"partition", to_json(s.partition)}};
}

Json fristedt_sample_to_json(const ChainSample& s) {
    return Json{{"model", "fristedt"}, {"seed", s.seed}, {"rows", s.sequence}, {"partition", to_json(s.partition)}};
}

Json tuple_to_json(const PartitionTuple& t, std::uint64_t seed) {
    Json parts = Json::array();
    for (const auto& p : t) {
        parts.push_back(to_json(p));
    }
    return Json{{"model", "quiver"}, {"seed", seed}, {"tuple", parts}};
}

QuiverInput quiver_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Quiver::Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) {
                throw FormatError("each edge must be [i, j, multiplicity]");
            }
            edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        }
        std::vector<Rational> u;
        for (const auto& v : j.at("U")) {
            u.push_back(rational_from_json(v));
        }
        if (static_cast<int>(u.size()) != n) {
            throw FormatError("U must list one value per vertex");
        }
        return {Quiver::from_edges(n, edges), QuiverParams(rational_from_json(j.at("q")), std::move(u))};
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

QuiverInput load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open quiver file '" + path + "'");
    }
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw FormatError(e.what());
    }
    return quiver_from_json(j);
}

}  // namespace qchain
