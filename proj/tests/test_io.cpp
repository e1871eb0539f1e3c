#include <gtest/gtest.h>

#include <centrum/errors.hpp>
#include <centrum/fixtures.hpp>
#include <centrum/io.hpp>

using namespace centrum;
using namespace centrum::fixtures;
using centrum::io::json;

TEST(Io, ScalarsAndMatrices) {
    EXPECT_EQ(io::to_json(Scalar(-6, 4)), json("-3/2"));
    EXPECT_EQ(io::scalar_from_json(json(5), 0), Scalar(5));
    EXPECT_EQ(io::scalar_from_json(json("1/2"), 7).str(), "4/1");
    Matrix m{{1, Scalar(1, 2)}, {0, -3}};
    EXPECT_EQ(io::to_json(m), json::parse(R"([["1/1","1/2"],["0/1","-3/1"]])"));
    EXPECT_EQ(io::matrix_from_json(io::to_json(m), 0), m);
    EXPECT_THROW(io::matrix_from_json(json::parse(R"([["1"],["1","2"]])"), 0), ParseError);
    EXPECT_THROW(io::scalar_from_json(json(1.5), 0), ParseError);
}

TEST(Io, AlgebraRoundTrip) {
    Rng rng(3);
    for (const auto& s : small_algebras()) {
        Transported t = transport_algebra(s.alg, random_invertible(s.alg.dim(), 2, rng));
        json j = io::to_json(t.alg);
        Algebra back = io::algebra_from_json(j, 0);
        EXPECT_EQ(io::to_json(back), j);
        EXPECT_EQ(back.structure_constants(), t.alg.structure_constants());
    }
    EXPECT_EQ(io::algebra_from_json(json("matrix:2"), 0).dim(), 4u);
    EXPECT_EQ(io::algebra_from_json(json{{"named", "upper:3"}}, 0).dim(), 6u);
    EXPECT_THROW(io::algebra_from_json(json{{"dim", 2}}, 0), ParseError);
}

TEST(Io, ShorthandForms) {
    AlgebraMap d = io::map_from_json(json{{"diagonal", 2}}, 0);
    EXPECT_EQ(d.mat(), diagonal_inclusion(2).mat());
    AlgebraMap u = io::map_from_json(json{{"unit", "matrix:2"}}, 0);
    EXPECT_EQ(u.mat(), unit_map(full_matrix_algebra(2)).mat());
    AlgebraMap gf = io::map_from_json(json{{"compose", {{{"diagonal", 2}}, {{"unit", "product:k^2"}}}}}, 0);
    EXPECT_EQ(gf.mat(), Matrix::column(full_matrix_algebra(2).unit()));
    EXPECT_EQ(io::bimodule_from_json(json{{"column", 3}}, 0).dim(), 3u);
    EXPECT_EQ(io::bimodule_from_json(json{{"regular", "dual_numbers"}}, 0).dim(), 2u);
    EXPECT_EQ(io::bimodule_from_json(json{{"restriction", {{"diagonal", 2}}}}, 0).dim(), 4u);
    Cospan c = io::cospan_from_json(json{{"identity", "product:k^2"}}, 0);
    EXPECT_TRUE(validate_cospan(c).clean());
    TwoDiagram t = io::diagram_from_json(json{{"identity", {{"identity", "k"}}}}, 0);
    EXPECT_TRUE(validate_2diagram(t).clean());
}

TEST(Io, ObjectRoundTrips) {
    Rng rng(5);
    auto samples = small_algebras();
    Bimodule m = random_bimodule(samples[3], samples[5], 4, rng);
    json jm = io::to_json(m);
    EXPECT_EQ(io::to_json(io::bimodule_from_json(jm, 0)), jm);
    BimoduleMap f{m, m, random_hom(hom_space(m, m), 2, rng)};
    json jf = io::to_json(f);
    EXPECT_EQ(io::to_json(io::bimodule_map_from_json(jf, 0)), jf);
    auto comm = small_commutative_algebras();
    Cospan c = random_cospan(comm[1].alg, comm[2].alg, 4, rng);
    json jc = io::to_json(c);
    EXPECT_EQ(io::to_json(io::cospan_from_json(jc, 0)), jc);
    TwoDiagram d = random_2diagram(c, random_cospan(comm[1].alg, comm[2].alg, 4, rng), rng);
    json jd = io::to_json(d);
    EXPECT_EQ(io::to_json(io::diagram_from_json(jd, 0)), jd);
}

TEST(Io, PrimeFieldConversion) {
    Algebra c5 = io::to_field(cyclic_group_algebra(5), 5);
    EXPECT_EQ(c5.unit().front().modulus(), 5u);
    EXPECT_TRUE(validate_algebra(c5).clean());
    Algebra named = io::algebra_from_json(json("group:C3"), 3);
    EXPECT_EQ(center(named).dim(), 3u);
}

TEST(Io, FieldNames) {
    EXPECT_EQ(io::parse_field("rational"), 0u);
    EXPECT_EQ(io::parse_field("Q"), 0u);
    EXPECT_EQ(io::parse_field("gfp:7"), 7u);
    EXPECT_THROW(io::parse_field("gfp:8"), ParseError);
    EXPECT_THROW(io::parse_field("reals"), ParseError);
}

TEST(Io, Reports) {
    ValidationReport r;
    r.subject = "x";
    r.add("associativity", {0, 1, 2}, "detail");
    json j = io::to_json(r);
    EXPECT_EQ(j["pass"], false);
    EXPECT_EQ(j["violations"][0]["law"], "associativity");
    EXPECT_EQ(j["violations"][0]["indices"], json::parse("[0,1,2]"));
    CoherenceReport c = CoherenceReport::compare("law", "inst", Matrix::identity(1), Matrix::identity(1));
    EXPECT_FALSE(io::to_json(c, false).contains("lhs"));
    EXPECT_TRUE(io::to_json(c, true).contains("lhs"));
}
