#include <gtest/gtest.h>

#include <centrum/errors.hpp>
#include <centrum/fixtures.hpp>

using namespace centrum;
using namespace centrum::fixtures;

namespace {

BimoduleMap random_map(const Bimodule& a, const Bimodule& b, Rng& rng) {
    return BimoduleMap{a, b, random_hom(hom_space(a, b), 2, rng)};
}

}  // namespace

TEST(FullCenter, ObjectIsTheCenter) {
    for (const char* name : {"k", "matrix:2", "product:k^3", "dual_numbers", "upper:2"}) {
        Algebra a = named_algebra(name);
        ZObjectResult z = Z_object(a);
        EXPECT_EQ(z.center.dim(), center(a).dim()) << name;
        EXPECT_TRUE(z.center.induced.is_commutative()) << name;
    }
}

TEST(FullCenter, HomOfDiagonalInclusion) {
    // Z(k^2 -> M_2) is k^2 -> k^2 <- k, the apex being the diagonal.
    ZMorphismResult z = Z_hom(diagonal_inclusion(2));
    EXPECT_EQ(z.cospan.apex.dim(), 2u);
    EXPECT_EQ(z.za.center.dim(), 2u);
    EXPECT_EQ(z.zb.center.dim(), 1u);
    EXPECT_TRUE(validate_cospan(z.cospan).clean());
    ASSERT_TRUE(z.centralizer);
    EXPECT_EQ(z.centralizer->subspace(), Subspace::span(diagonal_inclusion(2).mat()));
}

TEST(FullCenter, MapAndBimoduleRoutesAgree) {
    Rng rng(3);
    std::vector<AlgebraMap> maps{diagonal_inclusion(2), diagonal_inclusion(3), unit_map(full_matrix_algebra(2)),
                                 lax_witness_f(), lax_witness_g()};
    for (const auto& f : random_chain(3, rng)) maps.push_back(f);
    for (const auto& f : maps) {
        ZAgreement ag = Z_agreement(f);
        EXPECT_TRUE(ag.is_iso);
        EXPECT_TRUE(ag.legs_commute);
        EXPECT_TRUE(validate_map(ag.iso).clean());
        EXPECT_EQ(ag.by_bimodule.cospan.apex.dim(), ag.by_map.cospan.apex.dim());
    }
}

TEST(FullCenter, BimoduleCospans) {
    // Z of the column module k^2 over (M_2, k) is k -> k <- k.
    ZMorphismResult z = Z_bimodule(column_module(2));
    EXPECT_EQ(z.cospan.apex.dim(), 1u);
    EXPECT_TRUE(validate_cospan(z.cospan).clean());
    Bimodule cc = direct_sum(column_module(2), column_module(2));
    EXPECT_EQ(Z_bimodule(cc).cospan.apex.dim(), 4u);
}

TEST(FullCenter, TwoCellsValidate) {
    Rng rng(5);
    auto samples = small_algebras();
    for (int t = 0; t < 10; ++t) {
        const auto& a = samples[static_cast<std::size_t>(uniform_int(rng, 0, 5))];
        const auto& b = samples[static_cast<std::size_t>(uniform_int(rng, 0, 5))];
        Bimodule m = random_bimodule(a, b, 4, rng);
        Bimodule n = change_basis(m, random_invertible(m.dim(), 1, rng));
        Z2CellResult z = Z_2cell(random_map(m, n, rng));
        EXPECT_TRUE(validate_2diagram(z.diagram).clean());
        EXPECT_EQ(z.diagram.M.dim(), z.hom.dim());
    }
}

TEST(FullCenter, LaxWitnessRank) {
    // k -> k^2 -> M_2: Z(f) ⊗ Z(g) has dim 2 but Z(g f) = M_2 has dim 4.
    MultTransform w = mult_transform(lax_witness_f(), lax_witness_g());
    EXPECT_TRUE(validate_map(w.m).clean());
    EXPECT_EQ(w.domain.result.apex.dim(), 2u);
    EXPECT_EQ(w.zgf.cospan.apex.dim(), 4u);
    EXPECT_EQ(rank(w.m.mat()), 2u);
    EXPECT_TRUE(validate_2diagram(w.diagram).clean());
}

TEST(FullCenter, LaxFunctorOnRandomChains) {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        auto chain = random_chain(3, rng);
        for (const auto& rep : verify_lax_functor(chain[0], chain[1], chain[2])) EXPECT_TRUE(rep.pass) << rep.law;
        EXPECT_TRUE(all_pass(verify_lax_units(chain[0])));
    }
}

TEST(FullCenter, NLinearityAndAssociativity) {
    Rng rng(11);
    for (int t = 0; t < 3; ++t) {
        SemisimpleCase sc = semisimple_case(2, rng);
        NMap n = n_general(sc.lefts[0], sc.lefts[1], sc.rights[0], sc.rights[1]);
        EXPECT_TRUE(all_pass(check_n_linearity(n)));
        EXPECT_EQ(rank(n.map), n.target.dim());
    }
    // Over k every module is a plain vector space.
    Algebra k = ground_field();
    auto plain = [&](std::size_t d) {
        return Bimodule(k, k, d, {Matrix::identity(d)}, {Matrix::identity(d)});
    };
    EXPECT_TRUE(check_n_associativity(plain(2), plain(1), plain(1), plain(2), plain(1), plain(1)).pass);
}

TEST(FullCenter, MUnit) {
    for (const char* name : {"k", "product:k^2", "dual_numbers", "group:C2", "matrix:2"})
        EXPECT_TRUE(verify_m_unit(named_algebra(name)).pass) << name;
}

TEST(FullCenter, MNaturalityOnSemisimpleCases) {
    Rng rng(13);
    for (int t = 0; t < 2; ++t) {
        SemisimpleCase sc = semisimple_case(3, rng);
        auto reps = verify_m_naturality(random_map(sc.lefts[0], sc.lefts[1], rng),
                                        random_map(sc.rights[0], sc.rights[1], rng),
                                        random_map(sc.lefts[1], sc.lefts[2], rng),
                                        random_map(sc.rights[1], sc.rights[2], rng));
        for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.law;
    }
}

TEST(FullCenter, MoritaCenters) {
    // Frozen center dimensions; Z(M_n(A)) matches Z(A).
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"k", 1}, {"product:k^2", 2}, {"dual_numbers", 2}, {"group:C2", 2}, {"matrix:2", 1}};
    for (const auto& [name, dim] : expected)
        for (std::size_t n : {2, 3}) {
            MoritaReport m = morita_center_check(named_algebra(name), n);
            EXPECT_TRUE(m.iso) << name;
            EXPECT_TRUE(m.checks.clean()) << name;
            EXPECT_EQ(m.za.center.dim(), dim) << name;
            EXPECT_EQ(m.zm.center.dim(), dim) << name;
        }
}

TEST(FullCenter, ColumnModulesOverMatrixAlgebra) {
    Bimodule c = column_module(2);
    Bimodule plain(ground_field(), ground_field(), 2, {Matrix::identity(2)}, {Matrix::identity(2)});
    Thm58Report r = check_theorem58_hypotheses({c, direct_sum(c, c)}, {plain});
    EXPECT_FALSE(r.items.empty());
    for (const auto& it : r.items) EXPECT_TRUE(it.iso()) << it.what;
    EXPECT_EQ(r.verdict(), "non-lax on this corpus");
}

TEST(FullCenter, NonSemisimpleFailsCompBar) {
    Algebra d = truncated_polynomials(2);
    Bimodule eps(d, d, 1, {Matrix::identity(1), Matrix(1, 1)}, {Matrix::identity(1), Matrix(1, 1)});
    Thm58Report r = check_theorem58_hypotheses({regular_bimodule(d), eps}, {regular_bimodule(d)});
    EXPECT_EQ(r.verdict(), "lax on this corpus");
}

TEST(FullCenter, SemisimpleCorpusIsNonLax) {
    Rng rng(17);
    SemisimpleCase sc = semisimple_case(2, rng);
    Thm58Report r = check_theorem58_hypotheses(sc.lefts, sc.rights);
    for (const auto& it : r.items) EXPECT_TRUE(it.iso()) << it.what;
    EXPECT_EQ(r.verdict(), "non-lax on this corpus");
}
