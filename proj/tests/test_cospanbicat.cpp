#include <gtest/gtest.h>

#include <centrum/errors.hpp>
#include <centrum/fixtures.hpp>

using namespace centrum;
using namespace centrum::fixtures;

namespace {

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
    return xs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

// The same cospan with its apex on a random basis, and the comparison map.
struct Moved {
    Cospan c;
    AlgebraMap iso;
};

Moved move_apex(const Cospan& c0, Rng& rng) {
    Transported t = transport_algebra(c0.apex, random_invertible(c0.apex.dim(), 1, rng));
    Cospan c1{c0.A, c0.B, t.alg, AlgebraMap(c0.A, t.alg, t.from_old * c0.legA.mat()),
              AlgebraMap(c0.B, t.alg, t.from_old * c0.legB.mat())};
    return {c1, AlgebraMap(c0.apex, t.alg, t.from_old)};
}

}  // namespace

TEST(Cospan, IdentityAndValidation) {
    for (const auto& s : small_commutative_algebras()) {
        Cospan id = identity_cospan(s.alg);
        EXPECT_TRUE(validate_cospan(id).clean());
        EXPECT_TRUE(validate_2diagram(identity_2diagram(id)).clean());
    }
    // Legs must land in the center: k^2 -> M_2 on the diagonal does not.
    AlgebraMap diag = diagonal_inclusion(2);
    EXPECT_FALSE(validate_cospan({diag.src(), ground_field(), diag.tgt(), diag, unit_map(diag.tgt())}).clean());
    // The source must be commutative.
    Algebra m2 = full_matrix_algebra(2);
    EXPECT_FALSE(validate_cospan({m2, m2, m2, identity_map(m2), identity_map(m2)}).clean());
}

TEST(Cospan, CompositeDimensions) {
    // Apex A ⊗ B ⊗ C0 composed with B ⊗ C ⊗ C1 over B has dim A C0 C C1 (dim B cancels).
    Rng rng(3);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 10; ++t) {
        const Algebra& a = pick(comm, rng).alg;
        const Algebra& b = pick(comm, rng).alg;
        const Algebra& c = pick(comm, rng).alg;
        Cospan c1 = random_cospan(a, b, 4, rng), c2 = random_cospan(b, c, 4, rng);
        CospanComposite cc = compose_cospans(c2, c1);
        EXPECT_EQ(cc.result.apex.dim() * b.dim(), c1.apex.dim() * c2.apex.dim());
        EXPECT_TRUE(validate_cospan(cc.result).clean());
        CospanComposite left = compose_cospans(c1, identity_cospan(a));
        CospanComposite right = compose_cospans(identity_cospan(b), c1);
        EXPECT_EQ(left.result.apex.dim(), c1.apex.dim());
        EXPECT_EQ(right.result.apex.dim(), c1.apex.dim());
    }
}

TEST(Cospan, PushoutUniversalProperty) {
    // k^2 -> k^2 <- k^2 composed with itself is k^2, and the multiplication maps onto it.
    Algebra d = diagonal_algebra(2);
    Cospan id = identity_cospan(d);
    CospanComposite cc = compose_cospans(id, id);
    AlgebraMap u = pushout_universal(cc, identity_map(d), identity_map(d));
    EXPECT_TRUE(validate_map(u).clean());
    EXPECT_TRUE(is_isomorphism(u).has_value());
}

TEST(Cospan, CoherenceOnRandomCospans) {
    Rng rng(5);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 5; ++t) {
        std::vector<Algebra> objs;
        for (int i = 0; i < 5; ++i) objs.push_back(pick(comm, rng).alg);
        std::vector<Cospan> cs;
        for (int i = 0; i < 4; ++i) cs.push_back(random_cospan(objs[i], objs[i + 1], 4, rng));
        EXPECT_TRUE(check_pentagon(cs[0], cs[1], cs[2], cs[3]).pass);
        EXPECT_TRUE(check_triangle(cs[0], cs[1]).pass);
    }
}

TEST(Bimodule, PentagonAndTriangle) {
    Rng rng(7);
    auto samples = small_algebras();
    for (int t = 0; t < 6; ++t) {
        std::vector<Sample> objs;
        for (int i = 0; i < 5; ++i) objs.push_back(pick(samples, rng));
        std::vector<Bimodule> ms;
        for (int i = 0; i < 4; ++i) ms.push_back(random_bimodule(objs[i], objs[i + 1], 4, rng));
        EXPECT_TRUE(check_pentagon(ms[0], ms[1], ms[2], ms[3]).pass);
        EXPECT_TRUE(check_triangle(ms[0], ms[1]).pass);
    }
}

TEST(TwoDiagram, CompositionsValidate) {
    Rng rng(9);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 10; ++t) {
        const Algebra& a = pick(comm, rng).alg;
        const Algebra& b = pick(comm, rng).alg;
        const Algebra& c = pick(comm, rng).alg;
        Cospan x = random_cospan(a, b, 4, rng), y = random_cospan(a, b, 4, rng), z = random_cospan(a, b, 4, rng);
        TwoDiagram m = random_2diagram(x, y, rng), mu = random_2diagram(y, z, rng);
        EXPECT_TRUE(validate_2diagram(m).clean());
        VerticalComposite v = vertical_compose(mu, m);
        EXPECT_TRUE(validate_2diagram(v.diagram).clean());
        EXPECT_EQ(v.diagram.M.dim(), v.tensor.product.dim());
        Cospan x2 = random_cospan(b, c, 4, rng), y2 = random_cospan(b, c, 4, rng);
        TwoDiagram n = random_2diagram(x2, y2, rng);
        HorizontalComposite h = horizontal_compose(m, n);
        EXPECT_TRUE(validate_2diagram(h.diagram).clean());
        EXPECT_EQ(h.diagram.src.apex.dim(), h.src.result.apex.dim());
    }
    Cospan x = random_cospan(ground_field(), ground_field(), 4, rng);
    TwoDiagram id = identity_2diagram(x);
    EXPECT_EQ(id.M.dim(), x.apex.dim());
    EXPECT_TRUE(id.f.is_identity());
    EXPECT_TRUE(id.g.is_identity());
}

TEST(TwoDiagram, ValidatorRejectsBadLegs) {
    Cospan id = identity_cospan(diagonal_algebra(2));
    TwoDiagram d = identity_2diagram(id);
    d.f = Matrix{{1, 1}, {0, 1}};
    EXPECT_FALSE(validate_2diagram(d).clean());
}

TEST(Beta, InversesAndCell) {
    Rng rng(11);
    for (int t = 0; t < 4; ++t) {
        BetaInstance inst = random_beta_instance(rng, 16);
        Beta b = beta(inst.Mu, inst.Nu, inst.M, inst.N);
        EXPECT_TRUE((b.beta * b.beta_inverse).is_identity());
        EXPECT_TRUE((b.beta_inverse * b.beta).is_identity());
        EXPECT_TRUE(all_pass(check_beta(b)));
        EXPECT_TRUE(validate_3cell(beta_cell(b)).clean());
    }
}

TEST(Beta, NaturalUnderRandomThreeCells) {
    Rng rng(13);
    for (int t = 0; t < 3; ++t) {
        BetaInstance inst = random_beta_instance(rng, 16);
        ThreeCell phiU = random_3cell(inst.Mu, rng), psiU = random_3cell(inst.Nu, rng);
        ThreeCell phi = random_3cell(inst.M, rng), psi = random_3cell(inst.N, rng);
        EXPECT_TRUE(check_nattrans_axioms(phiU, psiU, phi, psi).pass);
    }
}

TEST(ThreeCell, SearchAndFunctoriality) {
    // Small apexes: the vertical composites multiply bimodule dimensions.
    Rng rng(17);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 4; ++t) {
        const Algebra& a = pick(comm, rng).alg;
        const Algebra& b = ground_field();
        Cospan x = random_cospan(a, b, 4, rng), y = random_cospan(a, b, 4, rng), z = random_cospan(a, b, 4, rng);
        TwoDiagram m = random_2diagram(x, y, rng), mu = random_2diagram(y, z, rng);
        // a on the upper row, b on the lower one.
        ThreeCell a1 = random_3cell(mu, rng), b1 = random_3cell(m, rng);
        EXPECT_TRUE(validate_3cell(a1).clean());
        // The copy found by search is a valid 3-cell with the same endpoints.
        auto found = find_3cell(a1.src, a1.tgt);
        ASSERT_TRUE(found);
        EXPECT_TRUE(validate_3cell(*found).clean());
        ThreeCell a2 = random_3cell(a1.tgt, rng), b2 = random_3cell(b1.tgt, rng);
        EXPECT_TRUE(validate_3cell(compose_3cells(a2, a1)).clean());
        EXPECT_TRUE(check_3cell_functoriality(a2, a1, b2, b1).pass);
        ThreeCell id = identity_3cell(mu);
        EXPECT_TRUE(id.delta.is_identity());
        EXPECT_EQ(compose_3cells(a1, id).delta, a1.delta);
    }
}

TEST(ThreeCell, NoCellBetweenDifferentDimensions) {
    Cospan id = identity_cospan(diagonal_algebra(2));
    TwoDiagram d = identity_2diagram(id);
    TwoDiagram doubled{id, id, direct_sum(d.M, d.M), Matrix::from_columns(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}),
                       Matrix::from_columns(4, {{1, 0, 1, 0}, {0, 1, 0, 1}})};
    ASSERT_TRUE(validate_2diagram(doubled).clean());
    Rng rng(19);
    InvertibleSearch s = find_invertible_3cell(d, doubled, rng);
    EXPECT_FALSE(s.cell);
    EXPECT_EQ(s.verdict, Verdict::CertifiedNone);
}

TEST(Invertibility, FailureBound) {
    SearchOptions opts;
    // 24 trials of a degree 4 determinant sampled from 17 values: (4/17)^24.
    EXPECT_NEAR(failure_bound_log2(4, opts), 24 * std::log2(4.0 / 17.0), 1e-12);
    EXPECT_LT(failure_bound_log2(8, opts), -20.0);
}

TEST(Invertibility, IsoLegCospansAreInvertible) {
    Rng rng(23);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 4; ++t) {
        const Algebra& a = pick(comm, rng).alg;
        Transported t1 = transport_algebra(a, random_invertible(a.dim(), 1, rng));
        Transported t2 = transport_algebra(a, random_invertible(a.dim(), 1, rng));
        Cospan c = make_cospan(AlgebraMap(a, t1.alg, t1.from_old), AlgebraMap(t2.alg, t1.alg, t1.from_old * t2.to_old));
        auto inv = is_invertible_cospan(c, rng);
        ASSERT_TRUE(inv);
        EXPECT_TRUE(inv->certified());
        EXPECT_TRUE(validate_cospan(inv->inverse).clean());
    }
}

TEST(Invertibility, TwoDiagramsWithInvertibleLegs) {
    Rng rng(29);
    auto comm = small_commutative_algebras();
    for (int t = 0; t < 4; ++t) {
        const Algebra& a = pick(comm, rng).alg;
        const Algebra& b = pick(comm, rng).alg;
        Cospan c0 = random_cospan(a, b, 8, rng);
        Moved mv = move_apex(c0, rng);
        TwoDiagram d = morphism_2diagram(c0, mv.c, mv.iso);
        EXPECT_TRUE(validate_2diagram(d).clean());
        auto inv = invert_2diagram(d, rng);
        ASSERT_TRUE(inv);
        EXPECT_TRUE(inv->certified());
    }
}

TEST(Invertibility, DiagonalInclusionCospanIsNot) {
    // Z(k^2) = k^2 -> k^2 <- k: the legs are not both isomorphisms.
    Rng rng(31);
    Cospan z = Z_hom(diagonal_inclusion(2)).cospan;
    EXPECT_TRUE(validate_cospan(z).clean());
    EXPECT_FALSE(is_invertible_cospan(z, rng).has_value());
}

TEST(FunctorA, EmbedAndComposition) {
    Rng rng(37);
    Algebra a = diagonal_algebra(2);
    Transported t1 = transport_algebra(a, random_invertible(2, 1, rng));
    Transported t2 = transport_algebra(a, random_invertible(2, 1, rng));
    AlgebraMap f(a, t1.alg, t1.from_old);
    AlgebraMap g(t1.alg, t2.alg, t2.from_old * t1.to_old);
    Cospan af = functor_A_embed(f);
    EXPECT_TRUE(validate_cospan(af).clean());
    EXPECT_EQ(af.apex.dim(), 2u);
    TwoDiagram w = functor_A_composition(f, g);
    EXPECT_TRUE(validate_2diagram(w).clean());
    EXPECT_EQ(w.tgt.apex.dim(), functor_A_embed(compose_maps(g, f)).apex.dim());
}
