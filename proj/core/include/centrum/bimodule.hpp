#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "centrum/algebra.hpp"

namespace centrum {

// A-B-bimodule on k^dim. Maps act on column vectors from the left, so the
// right action is anti-multiplicative: R[b*b'] = R[b'] * R[b].
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract);

    const Algebra& left() const { return d_->left; }
    const Algebra& right() const { return d_->right; }
    std::size_t dim() const { return d_->dim; }
    const std::vector<Matrix>& lact() const { return d_->lact; }
    const std::vector<Matrix>& ract() const { return d_->ract; }
    // Action of an arbitrary element given by coordinates.
    Matrix left_action(const Vector& a) const;
    Matrix right_action(const Vector& b) const;

    friend bool operator==(const Bimodule& a, const Bimodule& b);
    friend bool operator!=(const Bimodule& a, const Bimodule& b) { return !(a == b); }

private:
    struct Data {
        Algebra left, right;
        std::size_t dim = 0;
        std::vector<Matrix> lact, ract;
    };
    std::shared_ptr<const Data> d_;
};

struct BimoduleMap {
    Bimodule src, tgt;
    Matrix mat;  // tgt.dim x src.dim
};

// Bimodule map together with its verified two-sided inverse.
struct BimoduleIso {
    BimoduleMap map;
    BimoduleMap inverse;
};

struct HomSpace {
    Bimodule src, tgt;
    std::vector<Matrix> basis;  // tgt.dim x src.dim each
    Subspace vectorized;        // row-major vectorizations, canonical

    std::size_t dim() const { return basis.size(); }
    Matrix element(const Vector& coeffs) const;
    std::optional<Vector> coordinates(const Matrix& x) const;
};

// End(M) as an algebra on the hom-space basis with composition as product.
struct EndAlgebra {
    Algebra alg;
    HomSpace space;
};

// M ⊗_B N as a quotient of k^(m*n); index (p, q) -> p*n + q.
struct TensorResult {
    Bimodule product;
    Quotient quot;
    Bimodule leftFactor, rightFactor;
    // Set when a factor is itself a tensor product built by the overloads
    // below; used by assoc_iso to walk the quotient towers.
    std::shared_ptr<const TensorResult> leftTower, rightTower;
};

ValidationReport validate_bimodule(const Bimodule& m);
ValidationReport validate_bimodule_map(const BimoduleMap& f);
Bimodule make_bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> lact,
                       std::vector<Matrix> ract);
BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& tgt, const Matrix& mat);
BimoduleMap identity_bimodule_map(const Bimodule& m);
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);

Bimodule regular_bimodule(const Algebra& a);
// B as an A-B-bimodule through f: A -> B.
Bimodule restriction_bimodule(const AlgebraMap& f);
// Pulls the actions of M back along f: A -> M.left and g: B -> M.right.
Bimodule restrict_bimodule(const Bimodule& m, const AlgebraMap& f, const AlgebraMap& g);
Bimodule direct_sum(const Bimodule& m, const Bimodule& n);
// Transports M along the basis change whose columns are the new basis.
Bimodule change_basis(const Bimodule& m, const Matrix& p);
// Column module k^n over (M_n, k) and row module k^n over (k, M_n).
Bimodule column_module(std::size_t n);
Bimodule row_module(std::size_t n);

HomSpace hom_space(const Bimodule& m, const Bimodule& n);
EndAlgebra end_algebra(const Bimodule& m);
// [M,N] as an End(N)-End(M)-bimodule: l.x = l∘x and x.e = x∘e.
Bimodule hom_bimodule(const HomSpace& h, const EndAlgebra& end_tgt, const EndAlgebra& end_src);

// Generators of a as an algebra (basis indices chosen greedily), excluding the unit.
std::vector<Vector> algebra_generators(const Algebra& a);

// Quotient of X ⊗ Y by x.b ⊗ y - x ⊗ b.y where the middle algebra acts on X
// through right_ops and on Y through left_ops (one operator per generator).
Quotient tensor_quotient(std::size_t dim_x, std::size_t dim_y, const std::vector<Matrix>& right_ops,
                         const std::vector<Matrix>& left_ops);

TensorResult tensor_over(const Bimodule& m, const Bimodule& n);
TensorResult tensor_over(const TensorResult& mn, const Bimodule& p);
TensorResult tensor_over(const Bimodule& m, const TensorResult& np);
TensorResult tensor_over(const TensorResult& mn, const TensorResult& pq);

// proj_tgt (a ⊗ b) sect_src with descent through src verified.
Matrix tensor_maps(const Matrix& a, const Matrix& b, const Quotient& src, const Quotient& tgt);
BimoduleMap induced_map(const BimoduleMap& phi, const BimoduleMap& psi, const TensorResult& t_src,
                        const TensorResult& t_tgt);

// A ⊗_A T -> T and T ⊗_B B -> T.
BimoduleIso unit_iso_left(const TensorResult& t);
BimoduleIso unit_iso_right(const TensorResult& t);
// (M ⊗ N) ⊗ P -> M ⊗ (N ⊗ P); t_left.leftTower and t_right.rightTower must be set.
BimoduleIso assoc_iso(const TensorResult& t_left, const TensorResult& t_right);
// Same map from the four quotient stages directly.
Matrix assoc_matrix(const Quotient& inner_left, const Quotient& outer_left, const Quotient& inner_right,
                    const Quotient& outer_right, std::size_t m, std::size_t n, std::size_t p);

bool interchange_check(const BimoduleMap& xi, const BimoduleMap& zeta);

// Structure constants of (z, x) -> z∘x: column a*dim(hMN)+b holds the
// coordinates of hNP.basis[a] ∘ hMN.basis[b] in hom_space(M, P).
Matrix compose_hom(const HomSpace& hNP, const HomSpace& hMN, const HomSpace& hMP);

struct CompBar {
    TensorResult domain;  // [N,P] ⊗_[N,N] [M,N]
    HomSpace target;      // [M,P]
    Matrix map;
};
CompBar comp_bar(const HomSpace& hNP, const HomSpace& hMN);

}  // namespace centrum
