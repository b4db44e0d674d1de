#include "qchain/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace qchain;

TEST_CASE("rationals travel as strings") {
    CHECK(to_json(make_rational(3, 8)) == Json("3/8"));
    CHECK(to_json(make_rational(-2, 4)) == Json("-1/2"));
    CHECK(to_json(make_rational(7)) == Json("7"));
    CHECK(rational_from_json(Json("6/8")) == make_rational(3, 4));
    CHECK_THROWS_AS(rational_from_json(Json(0.5)), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json("0.5")), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), FormatError);
}

TEST_CASE("series round trip") {
    QSeries s({make_rational(1), make_rational(-1, 2), make_rational(0)}, Variable::y);
    const Json j = to_json(s);
    CHECK(j.at("variable") == "y");
    CHECK(j.at("order") == 2);
    CHECK(j.at("coefficients") == Json::array({"1", "-1/2", "0"}));
    const QSeries back = qseries_from_json(j);
    CHECK(back == s);
    CHECK(back.variable() == Variable::y);
    Json bad = j;
    bad["order"] = 5;
    CHECK_THROWS_AS(qseries_from_json(bad), FormatError);
    bad = j;
    bad["variable"] = "z";
    CHECK_THROWS_AS(qseries_from_json(bad), FormatError);
}

TEST_CASE("partitions and matrices") {
    CHECK(to_json(Partition({5, 4, 4, 1})).dump() == "[5,4,4,1]");
    CHECK(partition_from_json(Json::parse("[3,1]")) == Partition({3, 1}));
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,3]")), FormatError);
    CHECK_THROWS_AS(partition_from_json(Json::parse("\"x\"")), FormatError);

    const MeasureParams p(make_rational(2), make_rational(1, 2));
    const auto k = kernel_matrix(3, p);
    const Json params{{"q", "2"}, {"u", "1/2"}};
    const Json j = matrix_to_json(k, "gl", "K", params);
    CHECK(j.at("size") == 4);
    CHECK(j.at("model") == "gl");
    CHECK(j.at("entries").size() == 16);
    CHECK(j.at("entries")[0] == "1");
    CHECK(matrix_from_json(j) == k);
    Json short_entries = j;
    short_entries["entries"].erase(0);
    CHECK_THROWS_AS(matrix_from_json(short_entries), FormatError);
}

TEST_CASE("samples") {
    ChainSample s;
    s.seed = 7;
    s.sequence = {2, 1};
    s.partition = Partition::from_columns(s.sequence);
    const Json gl = gl_sample_to_json(s);
    CHECK(gl.dump() == R"({"columns":[2,1],"partition":[2,1],"seed":7})");
    ChainSample f;
    f.seed = 1;
    f.sequence = {3};
    f.partition = Partition({3});
    CHECK(fristedt_sample_to_json(f).at("model") == "fristedt");
    CHECK(fristedt_sample_to_json(f).at("rows") == Json::array({3}));
    const Json t = tuple_to_json({Partition({1}), Partition()}, 4);
    CHECK(t.at("tuple") == Json::parse("[[1],[]]"));
}

TEST_CASE("quiver files") {
    const Json good = Json::parse(R"({"n": 2, "edges": [[1, 2, 1]], "U": ["1/4", "1/4"], "q": "2"})");
    const QuiverInput in = quiver_from_json(good);
    CHECK(in.quiver.vertices() == 2);
    CHECK(in.quiver.edges(0, 1) == 1);
    CHECK(in.quiver.edges(1, 0) == 1);
    CHECK(in.params.u()[1] == make_rational(1, 4));

    const Json loop = Json::parse(R"({"n": 1, "edges": [[1, 1, 2]], "U": ["1/3"], "q": "3"})");
    CHECK(quiver_from_json(loop).quiver.edges(0, 0) == 2);

    for (const char* text : {R"({"n": 2, "edges": [[1, 3, 1]], "U": ["1/4", "1/4"], "q": "2"})",
                             R"({"n": 2, "edges": [[1, 2]], "U": ["1/4", "1/4"], "q": "2"})",
                             R"({"n": 2, "edges": [], "U": ["1/4"], "q": "2"})",
                             R"({"n": 1, "edges": [], "U": ["2"], "q": "2"})",
                             R"({"n": 1, "edges": [], "U": ["1/2"], "q": "1/2"})",
                             R"({"n": 1, "edges": [], "U": [0.5], "q": "2"})",
                             R"({"edges": [], "U": ["1/2"], "q": "2"})"}) {
        CHECK_THROWS_AS(quiver_from_json(Json::parse(text)), FormatError);
    }

    CHECK_THROWS_AS(load_quiver_file("/nonexistent/quiver.json"), FormatError);
    const std::string path = "test_io_quiver.json";
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_quiver_file(path), FormatError);
    {
        std::ofstream out(path);
        out << good.dump();
    }
    CHECK(load_quiver_file(path).quiver.vertices() == 2);
    std::remove(path.c_str());
}
