#include "centrum/algebra.hpp"

#include <charconv>

#include "centrum/errors.hpp"

namespace centrum {

Algebra::Algebra() : Algebra(1, {Scalar(1)}, {Scalar(1)}, "k") {}

Algebra::Algebra(std::size_t dim, std::vector<Scalar> sc, Vector unit, std::string label) {
    if (sc.size() != dim * dim * dim) throw ShapeError("structure constant count must be dim^3");
    if (unit.size() != dim) throw ShapeError("unit length must equal dim");
    auto d = std::make_shared<Data>();
    d->dim = dim;
    d->sc = std::move(sc);
    d->unit = std::move(unit);
    d->label = std::move(label);
    d->terms.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& c = d->sc[(i * dim + j) * dim + k];
                if (!c.is_zero()) d->terms[i * dim + j].push_back({k, c});
            }
    d->left.assign(dim, Matrix(dim, dim));
    d->right.assign(dim, Matrix(dim, dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            for (const auto& t : d->terms[i * dim + j]) d->left[i](t.k, j) = t.c;
            for (const auto& t : d->terms[j * dim + i]) d->right[i](t.k, j) = t.c;
        }
    d_ = std::move(d);
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw ShapeError("multiply: vector length does not match algebra dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (const auto& t : d_->terms[i * n + j]) out[t.k] += xy * t.c;
        }
    }
    return out;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vector out(dim());
    for (const auto& t : d_->terms[i * dim() + j]) out[t.k] = t.c;
    return out;
}

Matrix Algebra::left_mult(const Vector& x) const {
    return combine(x, d_->left, dim(), dim());
}

Matrix Algebra::right_mult(const Vector& x) const {
    return combine(x, d_->right, dim(), dim());
}

bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k)
                if (sc(i, j, k) != sc(j, i, k)) return false;
    return true;
}

const std::vector<Vector>& Algebra::generators() const {
    std::call_once(d_->gens_once, [this] {
        const std::size_t n = dim();
        auto closure = [&](std::vector<Vector> vecs) {
            Subspace s = Subspace::span(Matrix::from_columns(n, vecs));
            while (true) {
                std::vector<Vector> more;
                for (std::size_t a = 0; a < s.dim(); ++a)
                    for (std::size_t b = 0; b < s.dim(); ++b) more.push_back(multiply(s.basis().col(a), s.basis().col(b)));
                for (std::size_t a = 0; a < s.dim(); ++a) more.push_back(s.basis().col(a));
                Subspace t = Subspace::span(Matrix::from_columns(n, more));
                if (t.dim() == s.dim()) return s;
                s = t;
            }
        };
        std::vector<Vector> seed{unit()};
        Subspace s = closure(seed);
        for (std::size_t i = 0; i < n && s.dim() < n; ++i) {
            Vector e = unit_vector(n, i);
            if (s.contains(e)) continue;
            d_->gens.push_back(e);
            seed.push_back(e);
            s = closure(seed);
        }
    });
    return d_->gens;
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (a.d_ == b.d_) return true;
    return a.dim() == b.dim() && a.unit() == b.unit() && a.d_->sc == b.d_->sc;
}

AlgebraMap::AlgebraMap(Algebra src, Algebra tgt, Matrix mat)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(mat)) {
    if (mat_.rows() != tgt_.dim() || mat_.cols() != src_.dim())
        throw ShapeError("algebra map matrix must be tgt.dim x src.dim");
}

std::optional<Vector> Subalgebra::coordinates(const Vector& x) const {
    auto s = solve(incl, x);
    if (!s) return std::nullopt;
    return s;
}

ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport r;
    r.subject = "algebra" + (a.label().empty() ? std::string() : " " + a.label());
    const std::size_t n = a.dim();
    std::vector<Vector> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.basis_product(i, j);
    // The set of x with (xy)z = x(yz) for all y, z is closed under left
    // multiplication by any of its elements. When left words in the
    // generators span the algebra it is enough to test x among generators.
    const auto& gens = a.generators();
    std::vector<Vector> words{a.unit()};
    Subspace span = Subspace::span(Matrix::from_columns(n, words));
    for (std::size_t frontier = 0; frontier < words.size() && span.dim() < n; ++frontier)
        for (const auto& g : gens) {
            Vector w = a.multiply(g, words[frontier]);
            if (span.contains(w)) continue;
            words.push_back(w);
            span = Subspace::span(Matrix::from_columns(n, words));
        }
    auto sweep = [&](const std::vector<Vector>& left, bool report) {
        bool ok = true;
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector xy = a.multiply(left[i], unit_vector(n, j));
                for (std::size_t k = 0; k < n; ++k) {
                    Vector lhs = a.multiply(xy, unit_vector(n, k));
                    Vector rhs = a.multiply(left[i], prod[j * n + k]);
                    for (std::size_t l = 0; l < n; ++l)
                        if (lhs[l] != rhs[l]) {
                            if (!report) return false;
                            ok = false;
                            r.add("associativity", {i, j, k, l});
                        }
                }
            }
        return ok;
    };
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
    // A failure on generators is re-reported over all basis triples.
    if (span.dim() < n || !sweep(gens, false)) sweep(basis, true);
    for (std::size_t j = 0; j < n; ++j) {
        Vector left = a.multiply(a.unit(), unit_vector(n, j));
        Vector right = a.multiply(unit_vector(n, j), a.unit());
        for (std::size_t l = 0; l < n; ++l) {
            if (left[l] != Scalar(l == j ? 1 : 0)) r.add("left-unit", {j, l});
            if (right[l] != Scalar(l == j ? 1 : 0)) r.add("right-unit", {j, l});
        }
    }
    return r;
}

ValidationReport validate_map(const AlgebraMap& f) {
    ValidationReport r;
    r.subject = "algebra map";
    const Algebra& s = f.src();
    const Algebra& t = f.tgt();
    Vector u = f(s.unit());
    for (std::size_t l = 0; l < t.dim(); ++l)
        if (u[l] != t.unit()[l]) r.add("unital", {l});
    std::vector<Vector> img(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) img[i] = f.mat().col(i);
    // Generator times basis element suffices, by induction on word length.
    const auto& gens = s.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vector lhs = f(s.multiply(gens[i], unit_vector(s.dim(), j)));
            Vector rhs = t.multiply(f(gens[i]), img[j]);
            for (std::size_t l = 0; l < t.dim(); ++l)
                if (lhs[l] != rhs[l]) r.add("multiplicative", {i, j, l});
        }
    return r;
}

AlgebraMap make_map(const Algebra& src, const Algebra& tgt, const Matrix& mat) {
    AlgebraMap f(src, tgt, mat);
    validate_map(f).require();
    return f;
}

Subalgebra make_subalgebra(const Algebra& parent, const Subspace& s) {
    if (s.ambient() != parent.dim()) throw ShapeError("subspace ambient does not match algebra");
    const std::size_t d = s.dim();
    const Matrix& b = s.basis();
    std::vector<Vector> cols(d);
    for (std::size_t i = 0; i < d; ++i) cols[i] = b.col(i);
    std::vector<Scalar> sc(d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto x = solve(b, parent.multiply(cols[i], cols[j]));
            if (!x) throw ValidationError("subspace is not closed under multiplication");
            for (std::size_t k = 0; k < d; ++k) sc[(i * d + j) * d + k] = (*x)[k];
        }
    auto u = solve(b, parent.unit());
    if (!u) throw ValidationError("subspace does not contain the unit");
    return Subalgebra{parent, b, Algebra(d, std::move(sc), *u)};
}

Subalgebra center(const Algebra& a) {
    std::vector<Matrix> eqs;
    for (std::size_t i = 0; i < a.dim(); ++i) eqs.push_back(a.right_mult(i) - a.left_mult(i));
    return make_subalgebra(a, kernel(vstack(eqs)));
}

Subalgebra centralizer(const AlgebraMap& f) {
    const Algebra& t = f.tgt();
    std::vector<Matrix> eqs;
    for (std::size_t i = 0; i < f.src().dim(); ++i) {
        Vector x = f.mat().col(i);
        eqs.push_back(t.right_mult(x) - t.left_mult(x));
    }
    if (eqs.empty()) return make_subalgebra(t, Subspace::span(Matrix::identity(t.dim())));
    return make_subalgebra(t, kernel(vstack(eqs)));
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    const std::size_t m = a.dim(), n = b.dim(), d = m * n;
    std::vector<Scalar> sc(d * d * d);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t i2 = 0; i2 < m; ++i2) {
            Vector pa = a.basis_product(i, i2);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    Vector pb = b.basis_product(j, j2);
                    std::size_t x = i * n + j, y = i2 * n + j2;
                    for (std::size_t k = 0; k < m; ++k) {
                        if (pa[k].is_zero()) continue;
                        for (std::size_t l = 0; l < n; ++l)
                            if (!pb[l].is_zero()) sc[(x * d + y) * d + k * n + l] = pa[k] * pb[l];
                    }
                }
        }
    return Algebra(d, std::move(sc), kron(a.unit(), b.unit()));
}

Algebra opposite(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = a.sc(j, i, k);
    return Algebra(n, std::move(sc), a.unit(), a.label().empty() ? std::string() : a.label() + "^op");
}

Algebra matrix_algebra(const Algebra& base, std::size_t n) {
    if (n == 0) throw ShapeError("matrix_algebra: n must be at least 1");
    const std::size_t b = base.dim(), d = n * n * b;
    auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * b + k; };
    std::vector<Scalar> sc(d * d * d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t k = 0; k < b; ++k)
                    for (std::size_t r = 0; r < b; ++r) {
                        Vector p = base.basis_product(k, r);
                        for (std::size_t s = 0; s < b; ++s)
                            if (!p[s].is_zero()) sc[(idx(i, j, k) * d + idx(j, m, r)) * d + idx(i, m, s)] = p[s];
                    }
    Vector unit(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b; ++k) unit[idx(i, i, k)] = base.unit()[k];
    std::string label = base.label().empty() ? std::string() : "M" + std::to_string(n) + "(" + base.label() + ")";
    return Algebra(d, std::move(sc), std::move(unit), label);
}

Algebra direct_product(const std::vector<Algebra>& factors) {
    std::size_t d = 0;
    for (const auto& f : factors) d += f.dim();
    std::vector<Scalar> sc(d * d * d);
    Vector unit(d);
    std::size_t off = 0;
    std::string label;
    for (const auto& f : factors) {
        const std::size_t n = f.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) sc[((off + i) * d + off + j) * d + off + k] = f.sc(i, j, k);
        for (std::size_t i = 0; i < n; ++i) unit[off + i] = f.unit()[i];
        off += n;
        label += (label.empty() ? "" : "x") + (f.label().empty() ? std::string("?") : f.label());
    }
    return Algebra(d, std::move(sc), std::move(unit), label);
}

AlgebraMap compose_maps(const AlgebraMap& g, const AlgebraMap& f) {
    if (f.tgt() != g.src()) throw ShapeError("compose_maps: f.tgt differs from g.src");
    return AlgebraMap(f.src(), g.tgt(), g.mat() * f.mat());
}

AlgebraMap identity_map(const Algebra& a) { return AlgebraMap(a, a, Matrix::identity(a.dim())); }

AlgebraMap unit_map(const Algebra& a) { return AlgebraMap(ground_field(), a, Matrix::column(a.unit())); }

std::optional<AlgebraMap> is_isomorphism(const AlgebraMap& f) {
    auto inv = inverse(f.mat());
    if (!inv) return std::nullopt;
    AlgebraMap g(f.tgt(), f.src(), *inv);
    validate_map(g).require();
    return g;
}

bool image_central_in(const AlgebraMap& f) {
    const Algebra& t = f.tgt();
    for (std::size_t i = 0; i < f.src().dim(); ++i) {
        Vector x = f.mat().col(i);
        if (t.left_mult(x) != t.right_mult(x)) return false;
    }
    return true;
}

Algebra ground_field() { return Algebra(); }

Algebra full_matrix_algebra(std::size_t n) {
    Algebra m = matrix_algebra(ground_field(), n);
    return Algebra(m.dim(), m.structure_constants(), m.unit(), "matrix:" + std::to_string(n));
}

Algebra diagonal_algebra(std::size_t m) {
    std::vector<Scalar> sc(m * m * m);
    for (std::size_t i = 0; i < m; ++i) sc[(i * m + i) * m + i] = 1;
    return Algebra(m, std::move(sc), Vector(m, Scalar(1)), "product:k^" + std::to_string(m));
}

Algebra cyclic_group_algebra(std::size_t n) {
    if (n == 0) throw ShapeError("cyclic group order must be positive");
    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sc[(i * n + j) * n + (i + j) % n] = 1;
    return Algebra(n, std::move(sc), unit_vector(n, 0), "group:C" + std::to_string(n));
}

Algebra truncated_polynomials(std::size_t n) {
    if (n == 0) throw ShapeError("truncation degree must be positive");
    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) sc[(i * n + j) * n + i + j] = 1;
    return Algebra(n, std::move(sc), unit_vector(n, 0), n == 2 ? "dual_numbers" : "truncated:" + std::to_string(n));
}

Algebra upper_triangular(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
    const std::size_t d = basis.size();
    std::vector<Scalar> sc(d * d * d);
    Vector unit(d);
    for (std::size_t a = 0; a < d; ++a) {
        if (basis[a].first == basis[a].second) unit[a] = 1;
        for (std::size_t b = 0; b < d; ++b) {
            if (basis[a].second != basis[b].first) continue;
            for (std::size_t c = 0; c < d; ++c)
                if (basis[c] == std::make_pair(basis[a].first, basis[b].second)) sc[(a * d + b) * d + c] = 1;
        }
    }
    return Algebra(d, std::move(sc), std::move(unit), "upper:" + std::to_string(n));
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& whole) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0 || v > 64)
        throw ParseError("bad size in algebra name '" + whole + "'");
    return v;
}

}  // namespace

Algebra named_algebra(const std::string& name) {
    auto after = [&](const std::string& prefix) -> std::optional<std::string> {
        if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
        return std::nullopt;
    };
    if (name == "k") return ground_field();
    if (name == "dual_numbers") return truncated_polynomials(2);
    if (auto s = after("matrix:")) return full_matrix_algebra(parse_count(*s, name));
    if (auto s = after("product:k^")) return diagonal_algebra(parse_count(*s, name));
    if (auto s = after("group:C")) return cyclic_group_algebra(parse_count(*s, name));
    if (auto s = after("truncated:")) return truncated_polynomials(parse_count(*s, name));
    if (auto s = after("upper:")) return upper_triangular(parse_count(*s, name));
    throw ParseError("unknown algebra name '" + name + "'");
}

}  // namespace centrum
