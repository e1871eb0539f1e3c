#include "centrum/linalg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "centrum/errors.hpp"

namespace centrum {
namespace {

// Row-space basis kept in echelon form while rows stream in; finalize()
// brings it to reduced form. Rows are sparse early on, so each basis row
// carries the list of its nonzero positions.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t width) : width_(width) {}

    bool full() const { return rows_.size() == width_; }
    std::size_t rank() const { return rows_.size(); }

    bool add(Vector v) {
        if (full()) return false;
        reduce(v);
        std::size_t p = 0;
        while (p < width_ && v[p].is_zero()) ++p;
        if (p == width_) return false;
        Scalar inv = v[p].inverse();
        for (std::size_t j = p; j < width_; ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        nonzero_.insert(nonzero_.begin() + pos, support(v, p));
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    void finalize() {
        for (std::size_t r = rows_.size(); r-- > 0;) {
            std::size_t p = pivots_[r];
            for (std::size_t s = 0; s < r; ++s) {
                if (rows_[s][p].is_zero()) continue;
                const Scalar f = -rows_[s][p];
                for (std::size_t j : nonzero_[r]) rows_[s][j].add_product(f, rows_[r][j]);
                nonzero_[s] = support(rows_[s], pivots_[s]);
            }
        }
    }

    const std::vector<Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    void reduce(Vector& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v[pivots_[r]].is_zero()) continue;
            const Scalar f = -v[pivots_[r]];
            for (std::size_t j : nonzero_[r]) v[j].add_product(f, rows_[r][j]);
        }
    }

    static std::vector<std::size_t> support(const Vector& v, std::size_t from) {
        std::vector<std::size_t> s;
        for (std::size_t j = from; j < v.size(); ++j)
            if (!v[j].is_zero()) s.push_back(j);
        return s;
    }

    std::size_t width_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> nonzero_;
};

EchelonBuilder reduced_row_basis(const Matrix& m) {
    EchelonBuilder b(m.cols());
    for (std::size_t i = 0; i < m.rows() && !b.full(); ++i) b.add(m.row(i));
    b.finalize();
    return b;
}

EchelonBuilder reduced_column_basis(const Matrix& m) {
    EchelonBuilder b(m.rows());
    for (std::size_t j = 0; j < m.cols() && !b.full(); ++j) b.add(m.col(j));
    b.finalize();
    return b;
}

Quotient quotient_from_basis(std::size_t ambient, const EchelonBuilder& b) {
    Quotient q;
    q.ambient = ambient;
    q.relations = Matrix::from_columns(ambient, b.rows());
    const auto& piv = b.pivots();
    std::vector<std::size_t> free;
    std::vector<std::size_t> free_index(ambient, 0);
    for (std::size_t j = 0, r = 0; j < ambient; ++j) {
        if (r < piv.size() && piv[r] == j) {
            ++r;
        } else {
            free_index[j] = free.size();
            free.push_back(j);
        }
    }
    q.dim = free.size();
    q.sect = Matrix(ambient, q.dim);
    q.proj = Matrix(q.dim, ambient);
    for (std::size_t k = 0; k < free.size(); ++k) {
        q.sect(free[k], k) = 1;
        q.proj(k, free[k]) = 1;
    }
    // v is congruent to v - sum_r v[piv_r] * row_r, which vanishes on pivots.
    for (std::size_t r = 0; r < piv.size(); ++r) {
        const Vector& row = b.rows()[r];
        for (std::size_t k = 0; k < free.size(); ++k)
            if (!row[free[k]].is_zero()) q.proj(k, piv[r]) = -row[free[k]];
    }
    return q;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    EchelonBuilder b = reduced_row_basis(m);
    RrefResult out{Matrix(m.rows(), m.cols()), b.pivots()};
    for (std::size_t r = 0; r < b.rows().size(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) out.reduced(r, j) = b.rows()[r][j];
    return out;
}

std::size_t rank(const Matrix& m) {
    EchelonBuilder b(m.cols());
    for (std::size_t i = 0; i < m.rows() && !b.full(); ++i) b.add(m.row(i));
    return b.rank();
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

Subspace Subspace::span(const Matrix& columns) {
    EchelonBuilder b = reduced_column_basis(columns);
    Subspace s;
    s.ambient_ = columns.rows();
    s.basis_ = Matrix::from_columns(columns.rows(), b.rows());
    s.pivots_ = b.pivots();
    return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_) throw ShapeError("vector length does not match subspace ambient");
    Vector x(dim());
    for (std::size_t i = 0; i < dim(); ++i) x[i] = v[pivots_[i]];
    if (basis_.apply(x) != v) return std::nullopt;
    return x;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_columns(m.cols(), vecs));
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Matrix Quotient::descend(const Matrix& map, const char* what) const {
    if (map.cols() != ambient) throw ShapeError(std::string(what) + ": domain does not match quotient ambient");
    if (!(map * relations).is_zero()) throw DescentError(std::string(what) + " does not vanish on the relations");
    return map * sect;
}

Quotient Quotient::identity(std::size_t n) {
    return Quotient{n, Matrix(n, 0), n, Matrix::identity(n), Matrix::identity(n)};
}

Quotient kron(const Quotient& a, const Quotient& b) {
    Quotient q;
    q.ambient = a.ambient * b.ambient;
    q.dim = a.dim * b.dim;
    q.proj = kron(a.proj, b.proj);
    q.sect = kron(a.sect, b.sect);
    q.relations = hstack({kron(a.relations, Matrix::identity(b.ambient)), kron(Matrix::identity(a.ambient), b.relations)});
    return q;
}

Quotient cokernel(const Matrix& m) { return quotient_from_basis(m.rows(), reduced_column_basis(m)); }

Quotient quotient_by_rows(std::size_t ambient, const std::vector<Vector>& rows) {
    EchelonBuilder b(ambient);
    for (const auto& r : rows) {
        if (r.size() != ambient) throw ShapeError("relation length mismatch");
        if (b.full()) break;
        b.add(r);
    }
    b.finalize();
    return quotient_from_basis(ambient, b);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
    auto x = solve(m, Matrix::column(b));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw ShapeError("solve: right-hand side row mismatch");
    EchelonBuilder eb = reduced_row_basis(hstack({m, b}));
    Matrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < eb.rows().size(); ++r) {
        std::size_t p = eb.pivots()[r];
        if (p >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = eb.rows()[r][m.cols() + j];
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) return std::nullopt;
    EchelonBuilder eb = reduced_row_basis(hstack({m, Matrix::identity(m.rows())}));
    std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r)
        if (r >= eb.rows().size() || eb.pivots()[r] != r) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) inv(r, j) = eb.rows()[r][n + j];
    return inv;
}

Scalar determinant(const Matrix& m_in) {
    if (!m_in.square()) throw ShapeError("determinant of a non-square matrix");
    Matrix m = m_in;
    std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ShapeError("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Vector random_point(std::size_t dim, std::int64_t bound, Rng& rng) {
    if (bound < 1) throw ShapeError("random_point: bound must be at least 1");
    Vector v(dim);
    for (auto& x : v) x = Scalar(uniform_int(rng, -bound, bound));
    return v;
}

}  // namespace centrum
