#pragma once

#include <optional>
#include <string>
#include <vector>

#include "centrum/cospan.hpp"

namespace centrum {

struct ZObjectResult {
    Algebra input;
    Subalgebra center;
};

ZObjectResult Z_object(const Algebra& a);

// Z(A) -> apex <- Z(B). The apex is the centralizer of f for an algebra map,
// or End(M) for a bimodule.
struct ZMorphismResult {
    ZObjectResult za, zb;
    Cospan cospan;
    std::optional<Subalgebra> centralizer;
    std::optional<EndAlgebra> end;
};

ZMorphismResult Z_hom(const AlgebraMap& f);
ZMorphismResult Z_bimodule(const Bimodule& m);

// Evaluation at the unit, End(B through f) -> Z(f), with its checks.
struct ZAgreement {
    ZMorphismResult by_bimodule, by_map;
    AlgebraMap iso;
    bool is_iso = false;
    bool legs_commute = false;
};

ZAgreement Z_agreement(const AlgebraMap& f);

// The 2-diagram Z(M) => Z(N) with apex [M,N] and legs phi∘- and -∘phi.
struct Z2CellResult {
    BimoduleMap phi;
    ZMorphismResult zm, zn;
    HomSpace hom;
    TwoDiagram diagram;
};

Z2CellResult Z_2cell(const BimoduleMap& phi);

// z ⊗ z' -> g(z) z' : Z(f) ⊗_{Z(B)} Z(g) -> Z(g∘f).
struct MultTransform {
    ZMorphismResult zf, zg, zgf;
    CospanComposite domain;
    AlgebraMap m;
    TwoDiagram diagram;  // domain cospan => Z(g∘f) through m
};

MultTransform mult_transform(const AlgebraMap& f, const AlgebraMap& g);

// n: [M,M'] ⊗_{Z(B)} [N,N'] -> [M ⊗_B N, M' ⊗_B N'], x ⊗ y -> x ⊗_B y.
struct NMap {
    TensorResult src, tgt;  // M ⊗_B N and M' ⊗_B N'
    HomSpace left, right;   // [M,M'] and [N,N']
    HomSpace target;        // [M ⊗ N, M' ⊗ N']
    Quotient quot;          // of k^(dim left * dim right)
    Matrix map;
};

NMap n_general(const TensorResult& src, const TensorResult& tgt);
NMap n_general(const Bimodule& m, const Bimodule& m2, const Bimodule& n, const Bimodule& n2);

// The multiplication of Z on bimodules: Z(M) ⊗_{Z(B)} Z(N) -> Z(M ⊗_B N).
struct MultTransformBimodule {
    ZMorphismResult zm, zn, zmn;
    CospanComposite domain;
    NMap n;
    AlgebraMap m;
    TwoDiagram diagram;
};

MultTransformBimodule mult_transform_bimodule(const Bimodule& m, const Bimodule& n);
MultTransformBimodule mult_transform_bimodule(const TensorResult& mn);

// Linearity of n over the endomorphism algebras on both sides.
std::vector<CoherenceReport> check_n_linearity(const NMap& n);
// Associativity of n over M, N, P and primed counterparts.
CoherenceReport check_n_associativity(const Bimodule& m, const Bimodule& m2, const Bimodule& n, const Bimodule& n2,
                                      const Bimodule& p, const Bimodule& p2);

// The 3-cell m_{F,F',G,G'} between m_{F',G'} ⊚ (Z(phi) ⊠ Z(psi)) and
// Z(phi ⊗ psi) ⊚ m_{F,G}, with m = r^-1 ∘ m'.
struct MCell {
    MultTransformBimodule mfg, mfg2;
    Z2CellResult zphi, zpsi, zprod;
    HorizontalComposite h;
    VerticalComposite upper, lower;  // source and target of the 3-cell
    NMap n;
    Matrix m_prime;  // upper apex -> [FG, F'G']
    Matrix r;        // lower apex -> [FG, F'G'], invertible
    Matrix m;
};

MCell m_prime_and_m(const BimoduleMap& phi, const BimoduleMap& psi);

std::vector<CoherenceReport> verify_lax_functor(const AlgebraMap& f, const AlgebraMap& g, const AlgebraMap& h);
// Unit laws alone, for a single map.
std::vector<CoherenceReport> verify_lax_units(const AlgebraMap& f);

// Naturality identities and the 3-cell condition for (phi, psi), plus the
// composition law for phi2∘phi and psi2∘psi.
std::vector<CoherenceReport> verify_m_naturality(const BimoduleMap& phi, const BimoduleMap& psi,
                                                 const BimoduleMap& phi2, const BimoduleMap& psi2);
// m_{B,B,B,B} against r^-1 ∘ l for the regular bimodule of b.
CoherenceReport verify_m_unit(const Algebra& b);

struct MoritaReport {
    ZObjectResult za, zm;
    AlgebraMap map;  // z -> sum_i E_ii ⊗ z
    ValidationReport checks;
    bool iso = false;
};

MoritaReport morita_center_check(const Algebra& a, std::size_t n);

struct Thm58Item {
    std::string what;
    std::size_t rank = 0;
    std::size_t src_dim = 0;
    std::size_t tgt_dim = 0;
    bool iso() const { return rank == src_dim && rank == tgt_dim; }
};

struct Thm58Report {
    std::vector<Thm58Item> items;
    bool non_lax() const;
    std::string verdict() const;
};

// lefts are bimodules over (A,B), rights over (B,C). Checks comp_bar on all
// triples within each side, and n and m on all pairs of pairs.
Thm58Report check_theorem58_hypotheses(const std::vector<Bimodule>& lefts, const std::vector<Bimodule>& rights);

}  // namespace centrum
