#include <gtest/gtest.h>

#include <filesystem>

#include "loosesat/construction.hpp"
#include "loosesat/discharge.hpp"
#include "loosesat/errors.hpp"
#include "loosesat/io.hpp"
#include "support.hpp"

using namespace loosesat;
using namespace loosesat::testing;

TEST(ParseH3, LooseTriangle) {
    const auto g = parse_h3("p h3 6 3\ne 0 1 2\ne 2 3 4\ne 0 4 5\n");
    EXPECT_EQ(g, loose_triangle());
}

TEST(ParseH3, CommentsBlankLinesAndOrder) {
    const auto g = parse_h3("# a comment\n\np h3 6 3   # header\ne 4 3 2\r\n\te 0 1 2\ne 5 0 4");
    EXPECT_EQ(g, loose_triangle());
}

TEST(ParseH3, RoundTrips) {
    for (const auto& g : {loose_triangle(), construct_gn(14).graph, empty_graph(0), empty_graph(9)}) {
        const auto text = write_h3(g);
        EXPECT_EQ(parse_h3(text), g);
        EXPECT_EQ(write_h3(parse_h3(text)), text);
    }
    EXPECT_EQ(write_h3(empty_graph(4)), "p h3 4 0\n");
}

TEST(ParseH3, RepeatedVertexNamesTheLine) {
    try {
        parse_h3("p h3 5 1\ne 0 0 1\n");
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_h3("e 0 0 1"), ParseError);
}

TEST(ParseH3, ErrorPositions) {
    struct Case {
        const char* text;
        std::size_t line, column;
    };
    const Case cases[] = {
        {"p h3 5 1\ne 0 x 2\n", 2, 5},
        {"p h3 5\n", 1, 1},
        {"p h2 5 0\n", 1, 3},
        {"p h3 5 0\np h3 5 0\n", 2, 1},
        {"q\n", 1, 1},
        {"  e 0 1 2\n", 1, 3},
        {"p h3 5 1\ne 0 1\n", 2, 1},
        {"p h3 5 2\ne 0 1 2\n", 2, 1},
        {"p h3 5 0\n  e 0 1 2\n", 2, 3},
        {"p h3 5 1\ne 0 1 -2\n", 2, 7},
        {"", 1, 1},
    };
    for (const auto& c : cases) {
        try {
            parse_h3(c.text);
            ADD_FAILURE() << "accepted: " << c.text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), c.line) << c.text;
            EXPECT_EQ(e.column(), c.column) << c.text;
        }
    }
}

TEST(ParseH3, DomainErrors) {
    EXPECT_THROW(parse_h3("p h3 5 1\ne 0 1 5\n"), DomainError);
    EXPECT_THROW(parse_h3("p h3 5 2\ne 0 1 2\ne 2 1 0\n"), DomainError);
}

TEST(Files, WriteAndRead) {
    const auto path = std::filesystem::temp_directory_path() / "loosesat_io_test.h3";
    const auto g = construct_gn(17).graph;
    write_h3_file(path, g);
    EXPECT_EQ(read_h3_file(path), g);
    std::filesystem::remove(path);
    EXPECT_THROW(read_h3_file(path), std::runtime_error);
}

TEST(Render, HalfUnits) {
    EXPECT_EQ(render_half_units(0), "0");
    EXPECT_EQ(render_half_units(8), "4");
    EXPECT_EQ(render_half_units(9), "4.5");
    EXPECT_EQ(render_half_units(-1), "-0.5");
    EXPECT_EQ(render_half_units(-4), "-2");
}

TEST(Json, SchemaAndStableFields) {
    const auto g = construct_gn(16).graph;
    const auto report = run_discharge(g, 6);
    const auto j = to_json(report);
    EXPECT_EQ(j["schema"], kSchema);
    EXPECT_EQ(j["summary"]["ell"], 6);
    EXPECT_EQ(j["summary"]["deficient_fraction"], "0/14");
    EXPECT_EQ(j["vertices"].size(), 16u);
    EXPECT_EQ(j["vertices"][4]["final"], 8);
    EXPECT_EQ(j["vertices"][4]["charge"], "4");
    EXPECT_EQ(j.dump(), to_json(run_discharge(g, 6)).dump());

    const auto keys = [](const Json& o) {
        std::vector<std::string> k;
        for (const auto& [key, value] : o.items()) k.push_back(key);
        return k;
    };
    EXPECT_EQ(keys(j), (std::vector<std::string>{"schema", "d5", "summary", "vertices", "edge_classes",
                                                 "deficient_after_d5", "deficient"}));
}

TEST(Json, CertificateAndStats) {
    const auto cert = verify_saturated(loose_triangle());
    const auto j = to_json(cert);
    EXPECT_EQ(j["verdict"], "not-free");
    EXPECT_EQ(j["triangle"]["core"], Json::array({0, 2, 4}));

    const auto s = stats_json(loose_triangle());
    EXPECT_EQ(s["min_degree"], 1);
    EXPECT_EQ(s["max_degree"], 2);
    EXPECT_EQ(s["degree_histogram"].size(), 2u);
}
