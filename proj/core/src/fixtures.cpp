#include "centrum/fixtures.hpp"

#include <algorithm>

#include "centrum/errors.hpp"

namespace centrum::fixtures {
namespace {

std::vector<Matrix> regular_rep(const Algebra& a) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.left_mult(i));
    return out;
}

// Characters with values in {0, 1, -1} on the given basis.
std::vector<std::vector<Matrix>> small_characters(const Algebra& a) {
    std::vector<std::vector<Matrix>> out;
    const std::size_t n = a.dim();
    if (n > 6) return out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        Vector chi(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) chi[i] = c % 3 == 2 ? Scalar(-1) : Scalar(static_cast<int>(c % 3));
        auto eval = [&](const Vector& x) {
            Scalar s;
            for (std::size_t i = 0; i < n; ++i) s.add_product(chi[i], x[i]);
            return s;
        };
        if (!eval(a.unit()).is_one()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = eval(a.basis_product(i, j)) == chi[i] * chi[j];
        if (!ok) continue;
        std::vector<Matrix> rep;
        for (std::size_t i = 0; i < n; ++i) rep.push_back(Matrix{{chi[i]}});
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Matrix> column_rep(std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = 1;
            out.push_back(e);
        }
    return out;
}

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
    return xs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

AlgebraMap map_from_columns(const Algebra& src, const Algebra& tgt, const std::vector<Vector>& cols) {
    return make_map(src, tgt, Matrix::from_columns(tgt.dim(), cols));
}

Vector vec_of(std::initializer_list<Scalar> xs) { return Vector(xs); }

}  // namespace

Matrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t bound, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(static_cast<long long>(uniform_int(rng, -bound, bound)));
    return m;
}

Matrix random_invertible(std::size_t n, std::int64_t bound, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(n, n, bound, rng);
        if (inverse(m)) return m;
    }
}

Sample sample_of(const Algebra& a) {
    Sample s{a, {regular_rep(a)}};
    for (auto& c : small_characters(a)) s.reps.push_back(std::move(c));
    const std::string& label = a.label();
    if (label.rfind("matrix:", 0) == 0) {
        std::size_t n = 1;
        while (n * n < a.dim()) ++n;
        if (n > 1) s.reps.push_back(column_rep(n));
    }
    return s;
}

Sample semisimple_sample(const std::vector<std::size_t>& sizes) {
    std::vector<Algebra> factors;
    for (auto n : sizes) factors.push_back(full_matrix_algebra(n));
    Sample s{direct_product(factors), {}};
    const std::size_t d = s.alg.dim();
    std::size_t off = 0;
    for (auto n : sizes) {
        std::vector<Matrix> rep(d, Matrix(n, n));
        auto block = column_rep(n);
        for (std::size_t i = 0; i < block.size(); ++i) rep[off + i] = block[i];
        s.reps.push_back(std::move(rep));
        off += n * n;
    }
    return s;
}

Transported transport_algebra(const Algebra& a, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv || p.rows() != a.dim()) throw ShapeError("transport_algebra: basis change must be invertible");
    const std::size_t n = a.dim();
    std::vector<Scalar> sc(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector prod = pinv->apply(a.multiply(p.col(i), p.col(j)));
            for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = prod[k];
        }
    return {Algebra(n, std::move(sc), pinv->apply(a.unit()), a.label()), p, *pinv};
}

Sample transport_sample(const Sample& s, const Matrix& p) {
    Sample out{transport_algebra(s.alg, p).alg, {}};
    for (const auto& rep : s.reps) {
        std::vector<Matrix> r;
        for (std::size_t i = 0; i < p.cols(); ++i) r.push_back(combine(p.col(i), rep, rep[0].rows(), rep[0].cols()));
        out.reps.push_back(std::move(r));
    }
    return out;
}

AlgebraMap inner_automorphism(std::size_t n, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv) throw ShapeError("inner_automorphism: matrix must be invertible");
    Algebra m = full_matrix_algebra(n);
    Matrix mat(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = 1;
            mat.set_col(i * n + j, vec(p * e * *pinv));
        }
    return AlgebraMap(m, m, mat);
}

std::vector<Sample> small_algebras() {
    return {sample_of(ground_field()),           sample_of(diagonal_algebra(2)),
            sample_of(cyclic_group_algebra(2)),  sample_of(truncated_polynomials(2)),
            sample_of(upper_triangular(2)),      sample_of(full_matrix_algebra(2))};
}

std::vector<Sample> small_commutative_algebras() {
    std::vector<Sample> out;
    for (auto& s : small_algebras())
        if (s.alg.is_commutative()) out.push_back(std::move(s));
    return out;
}

Bimodule outer_bimodule(const Algebra& a, const std::vector<Matrix>& rho, const Algebra& b,
                        const std::vector<Matrix>& tau) {
    const std::size_t p = rho.at(0).rows(), q = tau.at(0).rows();
    std::vector<Matrix> lact, ract;
    for (const auto& r : rho) lact.push_back(kron(r, Matrix::identity(q)));
    for (const auto& t : tau) ract.push_back(kron(Matrix::identity(p), t.transpose()));
    return make_bimodule(a, b, p * q, std::move(lact), std::move(ract));
}

Bimodule random_bimodule(const Sample& a, const Sample& b, std::size_t max_dim, Rng& rng) {
    std::optional<Bimodule> m;
    std::size_t used = 0;
    if (a.alg == b.alg && a.alg.dim() <= max_dim && uniform_int(rng, 0, 2) == 0) {
        m = regular_bimodule(a.alg);
        used = a.alg.dim();
    }
    const auto pieces = uniform_int(rng, 1, 3);
    for (std::int64_t k = 0; k < pieces; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> fits;
        for (std::size_t i = 0; i < a.reps.size(); ++i)
            for (std::size_t j = 0; j < b.reps.size(); ++j)
                if (used + a.reps[i][0].rows() * b.reps[j][0].rows() <= max_dim) fits.emplace_back(i, j);
        if (fits.empty()) break;
        auto [i, j] = pick(fits, rng);
        Bimodule piece = outer_bimodule(a.alg, a.reps[i], b.alg, b.reps[j]);
        used += piece.dim();
        m = m ? direct_sum(*m, piece) : piece;
    }
    if (!m) throw ShapeError("random_bimodule: no piece fits the dimension budget");
    return change_basis(*m, random_invertible(m->dim(), 1, rng));
}

Matrix random_hom(const HomSpace& h, std::int64_t bound, Rng& rng) {
    return h.dim() == 0 ? Matrix(h.tgt.dim(), h.src.dim()) : h.element(random_point(h.dim(), bound, rng));
}

Cospan random_cospan(const Algebra& a, const Algebra& b, std::size_t max_apex, Rng& rng) {
    std::vector<Algebra> extras{ground_field()};
    for (const auto& c : {diagonal_algebra(2), truncated_polynomials(2), full_matrix_algebra(2)})
        if (a.dim() * b.dim() * c.dim() <= max_apex) extras.push_back(c);
    const Algebra& c0 = pick(extras, rng);
    Algebra apex = tensor_algebra(tensor_algebra(a, b), c0);
    Matrix la(apex.dim(), a.dim()), lb(apex.dim(), b.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) la.set_col(x, kron(kron(unit_vector(a.dim(), x), b.unit()), c0.unit()));
    for (std::size_t y = 0; y < b.dim(); ++y) lb.set_col(y, kron(kron(a.unit(), unit_vector(b.dim(), y)), c0.unit()));
    Transported t = transport_algebra(apex, random_invertible(apex.dim(), 1, rng));
    return make_cospan(AlgebraMap(a, t.alg, t.from_old * la), AlgebraMap(b, t.alg, t.from_old * lb));
}

TwoDiagram random_2diagram(const Cospan& src, const Cospan& tgt, Rng& rng) {
    Algebra ab = tensor_algebra(src.A, src.B);
    auto through = [&](const Cospan& c) {
        Matrix h(c.apex.dim(), ab.dim());
        for (std::size_t x = 0; x < src.A.dim(); ++x)
            for (std::size_t y = 0; y < src.B.dim(); ++y)
                h.set_col(x * src.B.dim() + y, c.apex.multiply(c.legA.mat().col(x), c.legB.mat().col(y)));
        return AlgebraMap(ab, c.apex, h);
    };
    Bimodule t = restrict_bimodule(regular_bimodule(tgt.apex), identity_map(tgt.apex), through(tgt));
    Bimodule s = restrict_bimodule(regular_bimodule(src.apex), through(src), identity_map(src.apex));
    TensorResult ts = tensor_over(t, s);
    const Bimodule& m = ts.product;
    Vector m0 = random_point(m.dim(), 2, rng);
    Matrix f(m.dim(), src.apex.dim()), g(m.dim(), tgt.apex.dim());
    for (std::size_t j = 0; j < src.apex.dim(); ++j) f.set_col(j, m.ract()[j].apply(m0));
    for (std::size_t i = 0; i < tgt.apex.dim(); ++i) g.set_col(i, m.lact()[i].apply(m0));
    Matrix q = random_invertible(m.dim(), 1, rng);
    Matrix qinv = *inverse(q);
    TwoDiagram d{src, tgt, change_basis(m, q), qinv * f, qinv * g};
    validate_2diagram(d).require();
    return d;
}

ThreeCell random_3cell(const TwoDiagram& d, Rng& rng) {
    Matrix q = random_invertible(d.M.dim(), 1, rng);
    Matrix qinv = *inverse(q);
    TwoDiagram d2{d.src, d.tgt, change_basis(d.M, q), qinv * d.f, qinv * d.g};
    ThreeCellSpace space = three_cell_space(d, d2);
    if (!space.particular) throw Error("random_3cell: no 3-cell to a transported copy");
    Matrix delta = *space.particular;
    for (const auto& dir : space.directions) delta += Scalar(static_cast<long long>(uniform_int(rng, -2, 2))) * dir;
    return ThreeCell{d, d2, delta};
}

BetaInstance random_beta_instance(Rng& rng, std::size_t max_product) {
    const std::vector<Sample> comm = small_commutative_algebras();
    for (;;) {
        const Algebra& a = pick(comm, rng).alg;
        const Algebra& b = pick(comm, rng).alg;
        const Algebra& c = pick(comm, rng).alg;
        Cospan x = random_cospan(a, b, 4, rng), y = random_cospan(a, b, 4, rng), z = random_cospan(a, b, 4, rng);
        Cospan u = random_cospan(b, c, 4, rng), v = random_cospan(b, c, 4, rng), w = random_cospan(b, c, 4, rng);
        BetaInstance out{random_2diagram(y, z, rng), random_2diagram(v, w, rng), random_2diagram(x, y, rng),
                         random_2diagram(u, v, rng)};
        const std::size_t dims[] = {out.Mu.M.dim(), out.Nu.M.dim(), out.M.M.dim(), out.N.M.dim()};
        if (std::max({dims[0], dims[1], dims[2], dims[3]}) <= 4 && dims[0] * dims[1] * dims[2] * dims[3] <= max_product)
            return out;
    }
}

std::vector<AlgebraMap> random_chain(std::size_t length, Rng& rng) {
    const std::vector<Sample> base = small_algebras();  // k, D2, kC2, dual, upper2, M2
    struct Edge {
        std::size_t from, to;
        AlgebraMap map;
    };
    std::vector<Edge> edges;
    const Algebra &k = base[0].alg, &d2 = base[1].alg, &c2 = base[2].alg, &dual = base[3].alg, &up = base[4].alg,
                  &m2 = base[5].alg;
    for (std::size_t i = 0; i < base.size(); ++i) {
        edges.push_back({i, i, identity_map(base[i].alg)});
        edges.push_back({0, i, unit_map(base[i].alg)});
        for (const auto& rep : base[i].reps)
            if (rep[0].rows() == 1 && i != 0) {
                Matrix chi(1, base[i].alg.dim());
                for (std::size_t j = 0; j < rep.size(); ++j) chi(0, j) = rep[j](0, 0);
                edges.push_back({i, 0, make_map(base[i].alg, k, chi)});
            }
    }
    edges.push_back({1, 5, diagonal_inclusion(2)});
    edges.push_back({1, 4, map_from_columns(d2, up, {vec_of({1, 0, 0}), vec_of({0, 0, 1})})});
    edges.push_back({4, 5, map_from_columns(up, m2, {vec_of({1, 0, 0, 0}), vec_of({0, 1, 0, 0}), vec_of({0, 0, 0, 1})})});
    edges.push_back({3, 4, map_from_columns(dual, up, {vec_of({1, 0, 1}), vec_of({0, 1, 0})})});
    edges.push_back({3, 5, map_from_columns(dual, m2, {vec_of({1, 0, 0, 1}), vec_of({0, 1, 0, 0})})});
    edges.push_back({2, 5, map_from_columns(c2, m2, {vec_of({1, 0, 0, 1}), vec_of({0, 1, 1, 0})})});
    edges.push_back({2, 1, map_from_columns(c2, d2, {vec_of({1, 1}), vec_of({1, -1})})});
    edges.push_back({1, 2, map_from_columns(d2, c2, {vec_of({Scalar(1, 2), Scalar(1, 2)}),
                                                      vec_of({Scalar(1, 2), Scalar(-1, 2)})})});
    edges.push_back({1, 1, map_from_columns(d2, d2, {vec_of({0, 1}), vec_of({1, 0})})});
    edges.push_back({3, 3, map_from_columns(dual, dual, {vec_of({1, 0}), vec_of({0, 2})})});
    edges.push_back({5, 5, inner_automorphism(2, random_invertible(2, 2, rng))});

    std::vector<std::size_t> nodes{static_cast<std::size_t>(uniform_int(rng, 0, 5))};
    std::vector<AlgebraMap> maps;
    for (std::size_t step = 0; step < length; ++step) {
        std::vector<const Edge*> out;
        for (const auto& e : edges)
            if (e.from == nodes.back()) out.push_back(&e);
        const Edge* e = pick(out, rng);
        maps.push_back(e->map);
        nodes.push_back(e->to);
    }
    std::vector<Transported> moved;
    for (auto n : nodes) moved.push_back(transport_algebra(base[n].alg, random_invertible(base[n].alg.dim(), 1, rng)));
    std::vector<AlgebraMap> out;
    for (std::size_t i = 0; i < maps.size(); ++i)
        out.push_back(AlgebraMap(moved[i].alg, moved[i + 1].alg, moved[i + 1].from_old * maps[i].mat() * moved[i].to_old));
    return out;
}

Bimodule semisimple_bimodule(const Sample& a, const Sample& b, std::size_t max_dim, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    std::vector<bool> seen_b(b.reps.size(), false);
    for (std::size_t i = 0; i < a.reps.size(); ++i) {
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(b.reps.size()) - 1));
        pieces.emplace_back(i, j);
        seen_b[j] = true;
    }
    for (std::size_t j = 0; j < b.reps.size(); ++j)
        if (!seen_b[j]) pieces.emplace_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(a.reps.size()) - 1)), j);
    auto piece_dim = [&](std::pair<std::size_t, std::size_t> p) {
        return a.reps[p.first][0].rows() * b.reps[p.second][0].rows();
    };
    std::size_t used = 0;
    for (auto p : pieces) used += piece_dim(p);
    if (used > max_dim) throw ShapeError("semisimple_bimodule: faithful bimodule exceeds the dimension budget");
    for (std::size_t extra = 0; extra < 2 && uniform_int(rng, 0, 1) == 1; ++extra) {
        auto p = pick(pieces, rng);
        if (used + piece_dim(p) > max_dim) break;
        pieces.push_back(p);
        used += piece_dim(p);
    }
    std::optional<Bimodule> m;
    for (auto [i, j] : pieces) {
        Bimodule piece = outer_bimodule(a.alg, a.reps[i], b.alg, b.reps[j]);
        m = m ? direct_sum(*m, piece) : piece;
    }
    return change_basis(*m, random_invertible(m->dim(), 1, rng));
}

SemisimpleCase semisimple_case(std::size_t count, Rng& rng, std::size_t max_dim) {
    const std::vector<std::vector<std::size_t>> outer{{1}, {1, 1}, {2}, {1, 2}};
    const std::vector<std::vector<std::size_t>> middle{{1}, {2}};
    auto moved = [&](const std::vector<std::size_t>& sizes) {
        Sample s = semisimple_sample(sizes);
        return transport_sample(s, random_invertible(s.alg.dim(), 1, rng));
    };
    SemisimpleCase out;
    out.a = moved(pick(outer, rng));
    out.b = moved(pick(middle, rng));
    out.c = moved(pick(outer, rng));
    for (std::size_t i = 0; i < count; ++i) out.lefts.push_back(semisimple_bimodule(out.a, out.b, max_dim, rng));
    for (std::size_t i = 0; i < count; ++i) out.rights.push_back(semisimple_bimodule(out.b, out.c, max_dim, rng));
    return out;
}

AlgebraMap lax_witness_f() { return unit_map(diagonal_algebra(2)); }

AlgebraMap lax_witness_g() { return diagonal_inclusion(2); }

AlgebraMap diagonal_inclusion(std::size_t n) {
    Algebra d = diagonal_algebra(n), m = full_matrix_algebra(n);
    Matrix mat(n * n, n);
    for (std::size_t i = 0; i < n; ++i) mat(i * n + i, i) = 1;
    return AlgebraMap(d, m, mat);
}

}  // namespace centrum::fixtures
