#include <gtest/gtest.h>

#include <set>

#include <centrum/errors.hpp>
#include <centrum/fixtures.hpp>

using namespace centrum;
using namespace centrum::fixtures;

namespace {

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
    return xs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

// M with the left action forgotten, as a (k, B)-bimodule.
Bimodule right_part(const Bimodule& m) {
    return restrict_bimodule(m, unit_map(m.left()), identity_map(m.right()));
}

// Hom_k(N, k) as a (k, B)-bimodule: (phi . b)(n) = phi(b n).
Bimodule dual_right(const Bimodule& n) {
    std::vector<Matrix> r;
    for (const auto& l : n.lact()) r.push_back(l.transpose());
    return Bimodule(ground_field(), n.left(), n.dim(), {Matrix::identity(n.dim())}, std::move(r));
}

}  // namespace

TEST(Bimodule, StandardModulesValidate) {
    for (std::size_t n : {1, 2, 3}) {
        EXPECT_TRUE(validate_bimodule(column_module(n)).clean());
        EXPECT_TRUE(validate_bimodule(row_module(n)).clean());
    }
    for (const auto& s : small_algebras()) EXPECT_TRUE(validate_bimodule(regular_bimodule(s.alg)).clean());
    EXPECT_TRUE(validate_bimodule(restriction_bimodule(diagonal_inclusion(2))).clean());
}

TEST(Bimodule, ValidatorRejectsBrokenActions) {
    Bimodule c = column_module(2);
    std::vector<Matrix> l = c.lact();
    std::swap(l[1], l[2]);  // E_ij acting as E_ji is anti-multiplicative
    EXPECT_FALSE(validate_bimodule(Bimodule(c.left(), c.right(), 2, l, c.ract())).clean());
    // Right action that does not commute with the left one.
    Bimodule r = regular_bimodule(full_matrix_algebra(2));
    EXPECT_FALSE(validate_bimodule(Bimodule(r.left(), r.right(), 4, r.lact(), r.lact())).clean());
}

TEST(Bimodule, ValidatorReportsExactlyTheFailingPairs) {
    // Corrupt the action of E_12 on the column module and recheck every
    // product L(e_i e_j) = L_i L_j and every commutation directly.
    Bimodule c = column_module(2);
    Algebra a = c.left();
    std::vector<Matrix> l = c.lact();
    l[1](0, 0) = 1;
    Bimodule bad(a, c.right(), 2, l, c.ract());
    std::set<std::vector<std::size_t>> expected, got;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Matrix prod(2, 2);
            for (std::size_t k = 0; k < 4; ++k) prod += a.sc(i, j, k) * l[k];
            if (prod != l[i] * l[j]) expected.insert({i, j});
        }
    for (const auto& v : validate_bimodule(bad).violations)
        if (v.law == "left-multiplicative") got.insert(v.indices);
    EXPECT_FALSE(expected.empty());
    EXPECT_EQ(got, expected);
}

TEST(Bimodule, HomSpaceDimensions) {
    // Frozen: End of a regular bimodule is the center; simple modules have scalar endomorphisms.
    EXPECT_EQ(hom_space(regular_bimodule(full_matrix_algebra(2)), regular_bimodule(full_matrix_algebra(2))).dim(), 1u);
    EXPECT_EQ(hom_space(regular_bimodule(diagonal_algebra(2)), regular_bimodule(diagonal_algebra(2))).dim(), 2u);
    EXPECT_EQ(hom_space(regular_bimodule(truncated_polynomials(2)), regular_bimodule(truncated_polynomials(2))).dim(), 2u);
    EXPECT_EQ(hom_space(regular_bimodule(upper_triangular(2)), regular_bimodule(upper_triangular(2))).dim(), 1u);
    EXPECT_EQ(hom_space(column_module(2), column_module(2)).dim(), 1u);
    EXPECT_EQ(hom_space(column_module(3), column_module(3)).dim(), 1u);
    Bimodule cc = direct_sum(column_module(2), column_module(2));
    EXPECT_EQ(hom_space(cc, cc).dim(), 4u);
}

TEST(Bimodule, HomSpaceElementsAreBimoduleMaps) {
    Rng rng(3);
    auto samples = small_algebras();
    for (int t = 0; t < 40; ++t) {
        const auto& a = pick(samples, rng);
        const auto& b = pick(samples, rng);
        Bimodule m = random_bimodule(a, b, 5, rng);
        Bimodule n = uniform_int(rng, 0, 1) ? change_basis(m, random_invertible(m.dim(), 1, rng))
                                            : random_bimodule(a, b, 5, rng);
        HomSpace h = hom_space(m, n);
        for (const auto& x : h.basis) EXPECT_TRUE(validate_bimodule_map({m, n, x}).clean());
        Matrix e = random_hom(h, 3, rng);
        auto c = h.coordinates(e);
        ASSERT_TRUE(c);
        EXPECT_EQ(h.element(*c), e);
    }
}

TEST(Bimodule, TensorDimensionsOracle) {
    // Row times column over M_n is a scalar; column times row over k is M_n.
    for (std::size_t n : {2, 3}) {
        EXPECT_EQ(tensor_over(row_module(n), column_module(n)).product.dim(), 1u);
        TensorResult cr = tensor_over(column_module(n), row_module(n));
        EXPECT_EQ(cr.product.dim(), n * n);
        EXPECT_EQ(hom_space(cr.product, regular_bimodule(full_matrix_algebra(n))).dim(), 1u);
    }
    Algebra d = truncated_polynomials(2);
    EXPECT_EQ(tensor_over(regular_bimodule(d), regular_bimodule(d)).product.dim(), 2u);
    Bimodule eps(ground_field(), d, 1, {Matrix::identity(1)}, {Matrix::identity(1), Matrix(1, 1)});
    Bimodule eps_left(d, ground_field(), 1, {Matrix::identity(1), Matrix(1, 1)}, {Matrix::identity(1)});
    EXPECT_EQ(tensor_over(eps, eps_left).product.dim(), 1u);
    EXPECT_EQ(tensor_over(eps, regular_bimodule(d)).product.dim(), 1u);
}

TEST(Bimodule, TensorDimensionMatchesBalancedForms) {
    // dim M ⊗_B N = dim Hom_B(M, N*), computed through hom_space.
    Rng rng(5);
    auto samples = small_algebras();
    for (int t = 0; t < 60; ++t) {
        const auto& a = pick(samples, rng);
        const auto& b = pick(samples, rng);
        const auto& c = pick(samples, rng);
        Bimodule m = random_bimodule(a, b, 5, rng);
        Bimodule n = random_bimodule(b, c, 5, rng);
        TensorResult mn = tensor_over(m, n);
        EXPECT_EQ(mn.product.dim(), hom_space(right_part(m), dual_right(n)).dim());
        EXPECT_TRUE(validate_bimodule(mn.product).clean());
    }
}

TEST(Bimodule, UnitIsomorphisms) {
    Rng rng(7);
    auto samples = small_algebras();
    for (int t = 0; t < 30; ++t) {
        const auto& a = pick(samples, rng);
        const auto& b = pick(samples, rng);
        Bimodule m = random_bimodule(a, b, 6, rng);
        BimoduleIso l = unit_iso_left(tensor_over(regular_bimodule(a.alg), m));
        BimoduleIso r = unit_iso_right(tensor_over(m, regular_bimodule(b.alg)));
        for (const auto* iso : {&l, &r}) {
            EXPECT_TRUE((iso->map.mat * iso->inverse.mat).is_identity());
            EXPECT_TRUE((iso->inverse.mat * iso->map.mat).is_identity());
            EXPECT_TRUE(validate_bimodule_map(iso->map).clean());
        }
    }
    EXPECT_THROW(unit_iso_left(tensor_over(column_module(2), row_module(2))), ShapeError);
}

TEST(Bimodule, AssociatorAgreesWithDirectFormula) {
    Rng rng(9);
    auto samples = small_algebras();
    for (int t = 0; t < 25; ++t) {
        const auto& a = pick(samples, rng);
        const auto& b = pick(samples, rng);
        const auto& c = pick(samples, rng);
        const auto& d = pick(samples, rng);
        Bimodule m = random_bimodule(a, b, 4, rng), n = random_bimodule(b, c, 4, rng), p = random_bimodule(c, d, 4, rng);
        TensorResult mn = tensor_over(m, n), np = tensor_over(n, p);
        TensorResult l = tensor_over(mn, p), r = tensor_over(m, np);
        BimoduleIso as = assoc_iso(l, r);
        EXPECT_TRUE((as.map.mat * as.inverse.mat).is_identity());
        EXPECT_TRUE((as.inverse.mat * as.map.mat).is_identity());
        EXPECT_TRUE(validate_bimodule_map(as.map).clean());
        // On representatives: (m ⊗ n) ⊗ p -> m ⊗ (n ⊗ p) is the identity of k^(mnp).
        Matrix lift = l.quot.proj * kron(mn.quot.proj, Matrix::identity(p.dim()));
        Matrix direct = r.quot.proj * kron(Matrix::identity(m.dim()), np.quot.proj);
        EXPECT_EQ(as.map.mat * lift, direct);
    }
}

TEST(Bimodule, InducedMapsAreFunctorial) {
    Rng rng(11);
    auto samples = small_algebras();
    for (int t = 0; t < 30; ++t) {
        const auto& a = pick(samples, rng);
        const auto& b = pick(samples, rng);
        const auto& c = pick(samples, rng);
        Bimodule m = random_bimodule(a, b, 4, rng), n = random_bimodule(b, c, 4, rng);
        Bimodule m2 = change_basis(m, random_invertible(m.dim(), 1, rng));
        Bimodule n2 = change_basis(n, random_invertible(n.dim(), 1, rng));
        BimoduleMap phi{m, m2, random_hom(hom_space(m, m2), 2, rng)};
        BimoduleMap phi2{m2, m, random_hom(hom_space(m2, m), 2, rng)};
        BimoduleMap psi{n, n2, random_hom(hom_space(n, n2), 2, rng)};
        BimoduleMap psi2{n2, n, random_hom(hom_space(n2, n), 2, rng)};
        TensorResult t1 = tensor_over(m, n), t2 = tensor_over(m2, n2);
        BimoduleMap once = induced_map(compose(phi2, phi), compose(psi2, psi), t1, t1);
        BimoduleMap twice = compose(induced_map(phi2, psi2, t2, t1), induced_map(phi, psi, t1, t2));
        EXPECT_EQ(once.mat, twice.mat);
        EXPECT_TRUE(validate_bimodule_map(induced_map(phi, psi, t1, t2)).clean());
        EXPECT_TRUE(induced_map(identity_bimodule_map(m), identity_bimodule_map(n), t1, t1).mat.is_identity());
        EXPECT_TRUE(interchange_check(phi, psi));
    }
}

TEST(Bimodule, EndAlgebraAndHomBimodule) {
    Bimodule c = direct_sum(column_module(2), column_module(2));
    EndAlgebra e = end_algebra(c);
    EXPECT_EQ(e.alg.dim(), 4u);
    EXPECT_TRUE(validate_algebra(e.alg).clean());
    EXPECT_EQ(center(e.alg).dim(), 1u);
    HomSpace h = hom_space(column_module(2), c);
    Bimodule hb = hom_bimodule(h, e, end_algebra(column_module(2)));
    EXPECT_EQ(hb.dim(), 2u);
    EXPECT_TRUE(validate_bimodule(hb).clean());
}

TEST(Bimodule, CompBarIsIsoOnSemisimpleAndNotOtherwise) {
    Bimodule c = column_module(2);
    Bimodule cc = direct_sum(c, c);
    CompBar iso = comp_bar(hom_space(cc, c), hom_space(c, cc));
    EXPECT_EQ(rank(iso.map), iso.target.dim());
    EXPECT_EQ(iso.domain.product.dim(), iso.target.dim());
    // Over the dual numbers with eps = D/(x): every composite eps -> D -> eps is
    // zero, so [D, eps] ⊗ [eps, D] -> [eps, eps] is not onto.
    Algebra d = truncated_polynomials(2);
    Bimodule reg = regular_bimodule(d);
    Bimodule eps(d, d, 1, {Matrix::identity(1), Matrix(1, 1)}, {Matrix::identity(1), Matrix(1, 1)});
    CompBar bad = comp_bar(hom_space(reg, eps), hom_space(eps, reg));
    EXPECT_EQ(bad.target.dim(), 1u);
    EXPECT_LT(rank(bad.map), bad.target.dim());
}

TEST(Bimodule, ComposeHomIsAssociative) {
    Rng rng(13);
    Bimodule m = random_bimodule(small_algebras()[5], small_algebras()[0], 6, rng);
    HomSpace h = hom_space(m, m);
    Matrix c = compose_hom(h, h, h);
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = 0; b < h.dim(); ++b)
            EXPECT_EQ(h.element(c.col(a * h.dim() + b)), h.basis[a] * h.basis[b]);
}
