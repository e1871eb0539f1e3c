#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "centrum/matrix.hpp"

namespace centrum {

using Rng = std::mt19937_64;

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// A subspace of k^ambient with canonical basis: the columns form a reduced
// column echelon matrix, so two subspaces are equal iff their bases are.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient);  // zero subspace

    // Column span of the given matrix.
    static Subspace span(const Matrix& columns);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    // pivots()[i] is the coordinate where basis column i has its leading 1.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const { return coordinates(v).has_value(); }
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

// Quotient of k^ambient by the column span of a relation matrix. proj realizes
// the canonical map onto the quotient and sect is the splitting spanned by the
// standard basis vectors that are not pivots of the relation space.
struct Quotient {
    std::size_t ambient = 0;
    Matrix relations;  // columns span the relations; a canonical basis for cokernel outputs
    std::size_t dim = 0;
    Matrix proj;  // dim x ambient
    Matrix sect;  // ambient x dim

    // Matrix of a map out of the quotient induced by `map` on the ambient space.
    // Throws DescentError unless map kills every relation.
    Matrix descend(const Matrix& map, const char* what = "map") const;

    // k^n with nothing identified.
    static Quotient identity(std::size_t n);
};

// Quotient of V1 ⊗ V2 by the kernel of a.proj ⊗ b.proj.
Quotient kron(const Quotient& a, const Quotient& b);

Quotient cokernel(const Matrix& m);
// Quotient of k^ambient by the span of the given rows (each of length ambient).
Quotient quotient_by_rows(std::size_t ambient, const std::vector<Vector>& rows);

std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Solves m * X = b column by column; none if any column has no solution.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

Vector random_point(std::size_t dim, std::int64_t bound, Rng& rng);
// Uniform integer in [lo, hi], independent of the standard library's
// distribution implementation so that seeded streams are portable.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

}  // namespace centrum
