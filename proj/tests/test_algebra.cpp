#include <gtest/gtest.h>

#include <set>

#include <centrum/errors.hpp>
#include <centrum/fixtures.hpp>

using namespace centrum;
using namespace centrum::fixtures;

namespace {

// The center by brute force: x such that x e_j = e_j x for all basis e_j.
std::size_t brute_center_dim(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix k(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) k(j * n + c, i) = a.sc(i, j, c) - a.sc(j, i, c);
    return n - rank(k);
}

}  // namespace

TEST(Algebra, NamedAlgebrasValidate) {
    for (const char* name : {"k", "dual_numbers", "matrix:2", "matrix:3", "product:k^3", "group:C3", "truncated:4",
                             "upper:3"}) {
        Algebra a = named_algebra(name);
        EXPECT_TRUE(validate_algebra(a).clean()) << name;
        EXPECT_EQ(a.label(), std::string(name) == "truncated:2" ? "dual_numbers" : name);
    }
    EXPECT_THROW(named_algebra("matrix:x"), ParseError);
    EXPECT_THROW(named_algebra("quaternions"), ParseError);
}

TEST(Algebra, MatrixUnitsMultiplyAsExpected) {
    const std::size_t n = 3;
    Algebra a = full_matrix_algebra(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vector expected(n * n);
                    if (j == k) expected[i * n + l] = 1;
                    EXPECT_EQ(a.basis_product(i * n + j, k * n + l), expected);
                }
}

TEST(Algebra, ValidatorFindsBrokenAssociativity) {
    // e1 e1 = e2, e1 e2 = e1, e2 e1 = 0: (e1 e1) e1 = 0 but e1 (e1 e1) = e1.
    std::vector<Scalar> sc(27);
    auto set = [&](int i, int j, int k) { sc[(i * 3 + j) * 3 + k] = 1; };
    for (int i = 0; i < 3; ++i) {
        set(0, i, i);
        if (i) set(i, 0, i);
    }
    set(1, 1, 2);
    set(1, 2, 1);
    set(2, 2, 2);
    Algebra bad(3, sc, unit_vector(3, 0));
    ValidationReport r = validate_algebra(bad);
    EXPECT_FALSE(r.clean());
    EXPECT_EQ(r.violations.front().law, "associativity");
    EXPECT_THROW(r.require(), ValidationError);
}

TEST(Algebra, ValidatorReportsExactlyTheViolatedQuadruples) {
    // Perturb one structure constant of M_2 and recompute (e_i e_j) e_k and
    // e_i (e_j e_k) from the raw tensor.
    Algebra m2 = full_matrix_algebra(2);
    const std::size_t n = 4;
    for (std::size_t entry : {0u, 13u, 38u}) {
        std::vector<Scalar> sc = m2.structure_constants();
        sc[entry] = sc[entry] + Scalar(1);
        Algebra bad(n, sc, m2.unit());
        std::set<std::vector<std::size_t>> expected, got;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        Scalar lhs(0), rhs(0);
                        for (std::size_t m = 0; m < n; ++m) {
                            lhs += sc[(i * n + j) * n + m] * sc[(m * n + k) * n + l];
                            rhs += sc[(j * n + k) * n + m] * sc[(i * n + m) * n + l];
                        }
                        if (lhs != rhs) expected.insert({i, j, k, l});
                    }
        for (const auto& v : validate_algebra(bad).violations)
            if (v.law == "associativity") got.insert(v.indices);
        EXPECT_FALSE(expected.empty());
        EXPECT_EQ(got, expected) << "entry " << entry;
    }
}

TEST(Algebra, ValidatorFindsBrokenUnit) {
    Algebra k2 = diagonal_algebra(2);
    Algebra bad(2, k2.structure_constants(), unit_vector(2, 0));
    EXPECT_FALSE(validate_algebra(bad).clean());
}

TEST(Algebra, CenterDimensions) {
    // Frozen: scalars for matrix and triangular algebras, everything when commutative.
    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"k", 1},       {"matrix:2", 1},    {"matrix:3", 1},    {"product:k^3", 3},
        {"group:C3", 3}, {"truncated:3", 3}, {"dual_numbers", 2}, {"upper:2", 1}, {"upper:3", 1}};
    for (const auto& [name, dim] : expected) {
        Subalgebra z = center(named_algebra(name));
        EXPECT_EQ(z.dim(), dim) << name;
        EXPECT_EQ(brute_center_dim(named_algebra(name)), dim) << name;
        EXPECT_TRUE(validate_algebra(z.induced).clean());
    }
}

TEST(Algebra, CenterOfMatrixAlgebraIsScalars) {
    Subalgebra z = center(full_matrix_algebra(2));
    EXPECT_EQ(z.incl, Matrix::column(Vector{1, 0, 0, 1}));
}

TEST(Algebra, CenterInvariantUnderBasisChange) {
    Rng rng(5);
    for (const auto& s : small_algebras())
        for (int t = 0; t < 3; ++t) {
            Transported tr = transport_algebra(s.alg, random_invertible(s.alg.dim(), 2, rng));
            EXPECT_TRUE(validate_algebra(tr.alg).clean());
            EXPECT_EQ(center(tr.alg).dim(), brute_center_dim(s.alg)) << s.alg.label();
            AlgebraMap iso(tr.alg, s.alg, tr.to_old);
            EXPECT_TRUE(validate_map(iso).clean());
            EXPECT_TRUE(is_isomorphism(iso).has_value());
        }
}

TEST(Algebra, CentralizerOfDiagonalInclusion) {
    for (std::size_t n : {2, 3}) {
        AlgebraMap f = diagonal_inclusion(n);
        EXPECT_TRUE(validate_map(f).clean());
        Subalgebra c = centralizer(f);
        EXPECT_EQ(c.dim(), n);
        EXPECT_EQ(c.subspace(), Subspace::span(f.mat()));
    }
}

TEST(Algebra, CentralizerExtremes) {
    Algebra m = full_matrix_algebra(2);
    EXPECT_EQ(centralizer(unit_map(m)).dim(), 4u);
    EXPECT_EQ(centralizer(identity_map(m)).dim(), 1u);
    Algebra u = upper_triangular(2);
    EXPECT_EQ(centralizer(identity_map(u)).subspace(), center(u).subspace());
}

TEST(Algebra, Constructions) {
    Algebra m2 = full_matrix_algebra(2), d2 = diagonal_algebra(2);
    Algebra t = tensor_algebra(m2, d2);
    EXPECT_EQ(t.dim(), 8u);
    EXPECT_TRUE(validate_algebra(t).clean());
    EXPECT_EQ(center(t).dim(), 2u);
    Algebra op = opposite(upper_triangular(2));
    EXPECT_TRUE(validate_algebra(op).clean());
    EXPECT_EQ(op.sc(0, 1, 1), upper_triangular(2).sc(1, 0, 1));
    Algebra mm = matrix_algebra(d2, 2);
    EXPECT_EQ(mm.dim(), 8u);
    EXPECT_EQ(center(mm).dim(), 2u);
    Algebra p = direct_product({m2, ground_field()});
    EXPECT_EQ(p.dim(), 5u);
    EXPECT_EQ(center(p).dim(), 2u);
    EXPECT_FALSE(m2.is_commutative());
    EXPECT_TRUE(d2.is_commutative());
}

TEST(Algebra, MapValidation) {
    Algebra d2 = diagonal_algebra(2);
    EXPECT_TRUE(validate_map(unit_map(d2)).clean());
    // Not multiplicative: e1 -> e1 + e2.
    AlgebraMap bad(d2, d2, Matrix{{1, 0}, {1, 1}});
    EXPECT_FALSE(validate_map(bad).clean());
    EXPECT_THROW(make_map(d2, d2, Matrix{{1, 0}, {1, 1}}), ValidationError);
    // Not unital.
    AlgebraMap proj(d2, ground_field(), Matrix{{1, 0}});
    EXPECT_TRUE(validate_map(proj).clean());
    AlgebraMap zero(d2, d2, Matrix{{1, 0}, {0, 0}});
    EXPECT_FALSE(validate_map(zero).clean());
}

TEST(Algebra, GeneratorCheckAgreesWithFullCheck) {
    // Random matrices on the basis of M_2: the generator-based validator must
    // accept exactly the algebra maps, which we detect by checking all pairs.
    Rng rng(7);
    Algebra m = full_matrix_algebra(2);
    int homs = 0;
    for (int t = 0; t < 60; ++t) {
        Matrix mat = t % 2 ? random_invertible(4, 1, rng) : [&] {
            Matrix p = random_invertible(2, 1, rng);
            return inner_automorphism(2, p).mat();
        }();
        AlgebraMap f(m, m, mat);
        bool full = f(m.unit()) == m.unit();
        for (std::size_t i = 0; i < 4 && full; ++i)
            for (std::size_t j = 0; j < 4 && full; ++j)
                full = f(m.basis_product(i, j)) == m.multiply(f(unit_vector(4, i)), f(unit_vector(4, j)));
        EXPECT_EQ(validate_map(f).clean(), full);
        homs += full;
    }
    EXPECT_GE(homs, 30);
}

TEST(Algebra, CompositionAndIsomorphism) {
    AlgebraMap f = unit_map(diagonal_algebra(2));
    AlgebraMap g = diagonal_inclusion(2);
    AlgebraMap gf = compose_maps(g, f);
    EXPECT_EQ(gf.mat(), Matrix::column(full_matrix_algebra(2).unit()));
    EXPECT_THROW(compose_maps(f, g), ShapeError);
    EXPECT_FALSE(is_isomorphism(g).has_value());
    EXPECT_TRUE(image_central_in(f));
    EXPECT_FALSE(image_central_in(g));
}

TEST(Algebra, SubalgebraClosure) {
    Algebra m = full_matrix_algebra(2);
    EXPECT_NO_THROW(make_subalgebra(m, Subspace::span(diagonal_inclusion(2).mat())));
    // span{1, E12, E21} is not closed.
    Matrix gens = Matrix::from_columns(4, {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    EXPECT_THROW(make_subalgebra(m, Subspace::span(gens)), ValidationError);
}

TEST(Algebra, GeneratorsSpanByLeftWords) {
    for (const auto& s : small_algebras()) {
        const Algebra& a = s.alg;
        Matrix words = Matrix::column(a.unit());
        for (int round = 0; round < 4; ++round) {
            std::vector<Vector> cols;
            for (std::size_t j = 0; j < words.cols(); ++j) {
                cols.push_back(words.col(j));
                for (const auto& g : a.generators()) cols.push_back(a.multiply(g, words.col(j)));
            }
            words = Subspace::span(Matrix::from_columns(a.dim(), cols)).basis();
        }
        EXPECT_EQ(words.cols(), a.dim()) << a.label();
    }
}

TEST(Algebra, PrimeFieldCenters) {
    // k[C_3] over GF(3) is local but still commutative.
    Algebra c3 = cyclic_group_algebra(3);
    std::vector<Scalar> sc;
    for (const auto& x : c3.structure_constants()) sc.push_back(Scalar::parse(x.str(), 3));
    Vector unit;
    for (const auto& x : c3.unit()) unit.push_back(Scalar::parse(x.str(), 3));
    Algebra c3p(3, sc, unit);
    EXPECT_TRUE(validate_algebra(c3p).clean());
    EXPECT_EQ(center(c3p).dim(), 3u);
}
