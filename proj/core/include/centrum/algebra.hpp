#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "centrum/linalg.hpp"
#include "centrum/report.hpp"

namespace centrum {

// Finite-dimensional unital algebra given by structure constants
// e_i * e_j = sum_k sc(i,j,k) e_k. Immutable; copies share storage.
class Algebra {
public:
    Algebra();  // the ground field
    Algebra(std::size_t dim, std::vector<Scalar> sc, Vector unit, std::string label = {});

    std::size_t dim() const { return d_->dim; }
    const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
        return d_->sc[(i * d_->dim + j) * d_->dim + k];
    }
    const std::vector<Scalar>& structure_constants() const { return d_->sc; }
    const Vector& unit() const { return d_->unit; }
    const std::string& label() const { return d_->label; }

    Vector multiply(const Vector& x, const Vector& y) const;
    Vector basis_product(std::size_t i, std::size_t j) const;
    // Matrices of y -> e_i*y and y -> y*e_i.
    const Matrix& left_mult(std::size_t i) const { return d_->left.at(i); }
    const Matrix& right_mult(std::size_t i) const { return d_->right.at(i); }
    Matrix left_mult(const Vector& x) const;
    Matrix right_mult(const Vector& x) const;

    bool is_commutative() const;
    // A generating set for the algebra (basis vectors picked greedily, unit
    // excluded). Computed once per algebra value.
    const std::vector<Vector>& generators() const;
    bool same_object(const Algebra& other) const { return d_ == other.d_; }

    // On-the-nose equality of (dim, sc, unit); labels are ignored.
    friend bool operator==(const Algebra& a, const Algebra& b);
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
    struct Term {
        std::size_t k;
        Scalar c;
    };
    struct Data {
        std::size_t dim = 0;
        std::vector<Scalar> sc;
        Vector unit;
        std::string label;
        std::vector<std::vector<Term>> terms;  // nonzero constants per (i,j)
        std::vector<Matrix> left, right;
        mutable std::once_flag gens_once;
        mutable std::vector<Vector> gens;
    };
    std::shared_ptr<const Data> d_;
};

class AlgebraMap {
public:
    AlgebraMap() = default;
    // Unchecked; use validate_map or make_map to enforce the hom laws.
    AlgebraMap(Algebra src, Algebra tgt, Matrix mat);

    const Algebra& src() const { return src_; }
    const Algebra& tgt() const { return tgt_; }
    const Matrix& mat() const { return mat_; }
    Vector operator()(const Vector& x) const { return mat_.apply(x); }

    friend bool operator==(const AlgebraMap& a, const AlgebraMap& b) {
        return a.mat_ == b.mat_ && a.src_ == b.src_ && a.tgt_ == b.tgt_;
    }

private:
    Algebra src_, tgt_;
    Matrix mat_;
};

struct Subalgebra {
    Algebra parent;
    Matrix incl;  // parent.dim x d, canonical column echelon basis
    Algebra induced;

    std::size_t dim() const { return induced.dim(); }
    AlgebraMap inclusion() const { return AlgebraMap(induced, parent, incl); }
    Subspace subspace() const { return Subspace::span(incl); }
    // Coordinates of a parent vector in the subalgebra basis, if it lies there.
    std::optional<Vector> coordinates(const Vector& x) const;
};

ValidationReport validate_algebra(const Algebra& a);
ValidationReport validate_map(const AlgebraMap& f);
AlgebraMap make_map(const Algebra& src, const Algebra& tgt, const Matrix& mat);

// Subalgebra spanned by a subspace; throws ValidationError if it is not closed
// under multiplication or misses the unit.
Subalgebra make_subalgebra(const Algebra& parent, const Subspace& s);

Subalgebra center(const Algebra& a);
Subalgebra centralizer(const AlgebraMap& f);

Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Algebra opposite(const Algebra& a);
Algebra matrix_algebra(const Algebra& base, std::size_t n);
Algebra direct_product(const std::vector<Algebra>& factors);

AlgebraMap compose_maps(const AlgebraMap& g, const AlgebraMap& f);
AlgebraMap identity_map(const Algebra& a);
std::optional<AlgebraMap> is_isomorphism(const AlgebraMap& f);
bool image_central_in(const AlgebraMap& f);
// The unit map k -> a.
AlgebraMap unit_map(const Algebra& a);

// Named algebras: "k", "matrix:n", "product:k^m", "dual_numbers",
// "group:Cn", "truncated:n" (k[x]/(x^n)), "upper:n" (upper triangular n x n).
Algebra named_algebra(const std::string& name);
Algebra ground_field();
Algebra full_matrix_algebra(std::size_t n);
Algebra diagonal_algebra(std::size_t m);
Algebra cyclic_group_algebra(std::size_t n);
Algebra truncated_polynomials(std::size_t n);
Algebra upper_triangular(std::size_t n);

}  // namespace centrum
