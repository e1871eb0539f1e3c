#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centrum/bimodule.hpp"

namespace centrum {

// A -> T <- B with commutative A, B and legs landing in the center of T.
struct Cospan {
    Algebra A, B;
    Algebra apex;
    AlgebraMap legA, legB;
};

ValidationReport validate_cospan(const Cospan& c);
Cospan make_cospan(const AlgebraMap& legA, const AlgebraMap& legB);
Cospan identity_cospan(const Algebra& a);

// first: A -> T <- B, second: B -> S <- C, result: A -> T ⊗_B S <- C.
struct CospanComposite {
    Cospan first, second;
    Cospan result;
    Quotient quot;  // of k^(dim T * dim S)
};

CospanComposite compose_cospans(const Cospan& second, const Cospan& first);

// The map T ⊗_B S -> C induced by w: T -> C and v: S -> C.
AlgebraMap pushout_universal(const CospanComposite& c, const AlgebraMap& w, const AlgebraMap& v);

// A morphism from src to tgt (same A, B): M is a (tgt.apex, src.apex)-bimodule,
// f: src.apex -> M is right linear, g: tgt.apex -> M is left linear.
struct TwoDiagram {
    Cospan src, tgt;
    Bimodule M;
    Matrix f, g;
};

ValidationReport validate_2diagram(const TwoDiagram& d);
TwoDiagram identity_2diagram(const Cospan& c);
// For an algebra map h: src.apex -> tgt.apex compatible with the legs: the
// apex of tgt as a bimodule through h, with legs h and the identity.
TwoDiagram morphism_2diagram(const Cospan& src, const Cospan& tgt, const AlgebraMap& h);

struct ThreeCell {
    TwoDiagram src, tgt;
    Matrix delta;
};

ValidationReport validate_3cell(const ThreeCell& c);
ThreeCell identity_3cell(const TwoDiagram& d);
ThreeCell compose_3cells(const ThreeCell& second, const ThreeCell& first);

struct VerticalComposite {
    TwoDiagram upper, lower;
    TensorResult tensor;  // upper.M ⊗_S lower.M
    TwoDiagram diagram;
};

VerticalComposite vertical_compose(const TwoDiagram& upper, const TwoDiagram& lower);

struct HorizontalComposite {
    TwoDiagram left, right;       // over (A,B) and (B,C)
    CospanComposite src, tgt;     // composites of the source and target cospans
    Quotient quot;                // of k^(dim left.M * dim right.M)
    TwoDiagram diagram;
};

HorizontalComposite horizontal_compose(const TwoDiagram& left, const TwoDiagram& right);

// Tensor of 3-cell matrices between two composites of the same shape.
Matrix vertical_3cells(const Matrix& upper, const Matrix& lower, const VerticalComposite& from,
                       const VerticalComposite& to);
Matrix horizontal_3cells(const Matrix& left, const Matrix& right, const HorizontalComposite& from,
                         const HorizontalComposite& to);

// Interchange 3-cell for M, N (lower row) and Mu, Nu (upper row):
// (Mu ⊗_B Nu) ⊗ (M ⊗_B N) -> (Mu ⊗ M) ⊗_B (Nu ⊗ N).
struct Beta {
    HorizontalComposite upper_h, lower_h;
    VerticalComposite lhs;
    VerticalComposite left_v, right_v;
    HorizontalComposite rhs;
    Matrix beta, beta_inverse;  // beta_inverse built along the reverse tower
};

Beta beta(const TwoDiagram& Mu, const TwoDiagram& Nu, const TwoDiagram& M, const TwoDiagram& N);
ThreeCell beta_cell(const Beta& b);
// Both inverse laws, the leg conditions and bimodule linearity of beta.
std::vector<CoherenceReport> check_beta(const Beta& b);

// The affine space of 3-cells d1 => d2: particular + span(directions).
struct ThreeCellSpace {
    std::optional<Matrix> particular;
    std::vector<Matrix> directions;
};

ThreeCellSpace three_cell_space(const TwoDiagram& d1, const TwoDiagram& d2);
std::optional<ThreeCell> find_3cell(const TwoDiagram& d1, const TwoDiagram& d2);

enum class Verdict { Found, CertifiedNone, ProbablyNone };
std::string to_string(Verdict v);

struct SearchOptions {
    std::int64_t bound = 0;  // sample range [-bound, bound]; raised to 2 dim M if smaller
    std::size_t trials = 24;
    std::size_t grid_max_params = 3;
};

struct InvertibleSearch {
    std::optional<ThreeCell> cell;
    Verdict verdict = Verdict::CertifiedNone;
    std::size_t parameters = 0;
    // log2 of the bound on missing an invertible cell; 0 unless ProbablyNone.
    double failure_log2 = 0;
};

// Schwartz-Zippel bound, log2, on all random trials missing an invertible
// point of a nonzero determinant of degree dim.
double failure_bound_log2(std::size_t dim, const SearchOptions& opts);

InvertibleSearch find_invertible_3cell(const TwoDiagram& d1, const TwoDiagram& d2, Rng& rng,
                                       const SearchOptions& opts = {});

// Two-sided inverse of a 2-diagram with invertible legs, and the certificates
// that both composites are isomorphic to identity 2-diagrams.
struct InvertibleTwoCell {
    TwoDiagram inverse;
    InvertibleSearch left, right;  // inverse ⊚ d ≅ id, d ⊚ inverse ≅ id
    bool certified() const {
        return left.verdict == Verdict::Found && right.verdict == Verdict::Found;
    }
};

std::optional<InvertibleTwoCell> invert_2diagram(const TwoDiagram& d, Rng& rng, const SearchOptions& opts = {});

struct CospanInverse {
    Cospan inverse;
    TwoDiagram witness_left;   // inverse ⊚ c => id_A
    TwoDiagram witness_right;  // c ⊚ inverse => id_B
    InvertibleTwoCell left, right;
    bool certified() const { return left.certified() && right.certified(); }
};

std::optional<CospanInverse> is_invertible_cospan(const Cospan& c, Rng& rng, const SearchOptions& opts = {});

// A -> B <- B for an isomorphism f of commutative algebras.
Cospan functor_A_embed(const AlgebraMap& f);
// Witness 2-diagram A(g) ⊚ A(f) => A(g∘f).
TwoDiagram functor_A_composition(const AlgebraMap& f, const AlgebraMap& g);

// Coherence of the bimodule tensor product.
CoherenceReport check_pentagon(const Bimodule& m, const Bimodule& n, const Bimodule& p, const Bimodule& q);
// M ⊗_B N against M ⊗_B B ⊗_B N.
CoherenceReport check_triangle(const Bimodule& m, const Bimodule& n);
// The same laws for cospan composition, c1 first.
CoherenceReport check_pentagon(const Cospan& c1, const Cospan& c2, const Cospan& c3, const Cospan& c4);
CoherenceReport check_triangle(const Cospan& c1, const Cospan& c2);

// Lax functor axioms for horizontal composition with comparison beta and
// identity unit: rows (M1, N1) -> (M2, N2) -> (M3, N3), each M over (A,B),
// each N over (B,C); M2 ⊚ M1 etc. must be composable.
std::vector<CoherenceReport> check_laxfunctor_axioms(const std::vector<TwoDiagram>& ms,
                                                     const std::vector<TwoDiagram>& ns);
// Naturality of beta for 3-cells phi: M => M~, psi: N => N~, and upper
// counterparts.
CoherenceReport check_nattrans_axioms(const ThreeCell& phiU, const ThreeCell& psiU, const ThreeCell& phi,
                                      const ThreeCell& psi);
// Functoriality of vertical composition on 3-cells.
CoherenceReport check_3cell_functoriality(const ThreeCell& a2, const ThreeCell& a1, const ThreeCell& b2,
                                          const ThreeCell& b1);

}  // namespace centrum
