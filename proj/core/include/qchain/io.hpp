#pragma once

// JSON encodings. Rationals always travel as "p/q" strings in lowest
// terms; decimals never appear.

#include "qchain/glchain.hpp"
#include "qchain/quiver.hpp"
#include "qchain/qseries.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

namespace qchain {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"variable": "x", "order": N, "coefficients": ["1", "0", ...]}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// [5,4,4,1]
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"model": ..., "matrix": name, "size": n, "params": {...},
//  "entries": [row-major "p/q" strings]}
Json matrix_to_json(const TruncatedMatrix& m, const std::string& model, const std::string& name,
                    const Json& params);
TruncatedMatrix matrix_from_json(const Json& j);

// GL samples carry "columns"; Fristedt samples carry "rows" and a
// "model": "fristedt" tag.
Json gl_sample_to_json(const ChainSample& s);
Json fristedt_sample_to_json(const ChainSample& s);

Json tuple_to_json(const PartitionTuple& t, std::uint64_t seed);

struct QuiverInput {
    Quiver quiver;
    QuiverParams params;
};

// {"n": 2, "edges": [[1, 2, 1]], "U": ["1/4", "1/4"], "q": "2"}; vertices
// are 1-indexed and loops are [i, i, m]. Throws FormatError.
QuiverInput quiver_from_json(const Json& j);
QuiverInput load_quiver_file(const std::string& path);

}  // namespace qchain
