#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "centrum/fullcenter.hpp"

// Seeded generators for randomized instances and the fixed corpus.
namespace centrum::fixtures {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t bound, Rng& rng);
Matrix random_invertible(std::size_t n, std::int64_t bound, Rng& rng);

// An algebra together with some left representations; reps[r][i] is the
// image of basis vector i. Transposes of these serve as right modules.
struct Sample {
    Algebra alg;
    std::vector<std::vector<Matrix>> reps;
};

// Regular representation, characters with values in {0, 1, -1}, and the
// column representation for full matrix algebras.
Sample sample_of(const Algebra& a);
// Product of full matrix algebras M_{n_1} x ... with its irreducible representations.
Sample semisimple_sample(const std::vector<std::size_t>& sizes);

// The same algebra on the basis given by the columns of p.
struct Transported {
    Algebra alg;
    Matrix to_old;    // p
    Matrix from_old;  // p^-1
};
Transported transport_algebra(const Algebra& a, const Matrix& p);
Sample transport_sample(const Sample& s, const Matrix& p);
// An inner automorphism x -> p x p^-1 of M_n.
AlgebraMap inner_automorphism(std::size_t n, const Matrix& p);

// k, k^2, k[C2], k[x]/(x^2), upper:2, M_2.
std::vector<Sample> small_algebras();
// The commutative ones among them.
std::vector<Sample> small_commutative_algebras();

// V ⊗ W with A acting on V by rho and B acting on W by transposes of tau.
Bimodule outer_bimodule(const Algebra& a, const std::vector<Matrix>& rho, const Algebra& b,
                        const std::vector<Matrix>& tau);
Bimodule random_bimodule(const Sample& a, const Sample& b, std::size_t max_dim, Rng& rng);
// Random element of hom_space(m, n).
Matrix random_hom(const HomSpace& h, std::int64_t bound, Rng& rng);

// A -> A ⊗ B ⊗ C0 <- B with a small C0, transported to a random basis.
Cospan random_cospan(const Algebra& a, const Algebra& b, std::size_t max_apex, Rng& rng);
// T ⊗_{A⊗B} S with legs through a random element.
TwoDiagram random_2diagram(const Cospan& src, const Cospan& tgt, Rng& rng);
// A 3-cell from d to a copy of d on a random basis.
ThreeCell random_3cell(const TwoDiagram& d, Rng& rng);

// Two composable rows of 2-diagrams: M: X => Y, Mu: Y => Z over (A,B) and
// N, Nu over (B,C). Resampled until every apex bimodule has dimension at
// most 4 and their product is at most max_product.
struct BetaInstance {
    TwoDiagram Mu, Nu, M, N;
};
BetaInstance random_beta_instance(Rng& rng, std::size_t max_product = 64);

// A composable chain of algebra maps between algebras of dimension at most 4,
// each on a random basis.
std::vector<AlgebraMap> random_chain(std::size_t length, Rng& rng);

// Bimodules between products of matrix algebras with a simple middle algebra,
// each faithful on the outer side.
struct SemisimpleCase {
    Sample a, b, c;
    std::vector<Bimodule> lefts;   // over (a, b)
    std::vector<Bimodule> rights;  // over (b, c)
};
SemisimpleCase semisimple_case(std::size_t count, Rng& rng, std::size_t max_dim = 6);
Bimodule semisimple_bimodule(const Sample& a, const Sample& b, std::size_t max_dim, Rng& rng);

// k -> k^2 -> M_2 through the unit and the diagonal inclusion.
AlgebraMap lax_witness_f();
AlgebraMap lax_witness_g();
// k^n -> M_n onto the diagonal.
AlgebraMap diagonal_inclusion(std::size_t n);

}  // namespace centrum::fixtures
