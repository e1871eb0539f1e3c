#include "centrum/cospan.hpp"

#include <cmath>
#include <string>

#include "centrum/errors.hpp"

namespace centrum {
namespace {

bool same_cospan(const Cospan& a, const Cospan& b) {
    return a.A == b.A && a.B == b.B && a.apex == b.apex && a.legA.mat() == b.legA.mat() &&
           a.legB.mat() == b.legB.mat();
}

// Index in the ambient space of the standard vector spanning sect column p.
std::vector<std::size_t> free_indices(const Quotient& q) {
    std::vector<std::size_t> out(q.dim);
    for (std::size_t p = 0; p < q.dim; ++p) {
        std::size_t hit = q.ambient;
        for (std::size_t i = 0; i < q.ambient; ++i) {
            if (q.sect(i, p).is_zero()) continue;
            if (hit != q.ambient || !q.sect(i, p).is_one()) throw Error("quotient section is not standard");
            hit = i;
        }
        if (hit == q.ambient) throw Error("quotient section is not standard");
        out[p] = hit;
    }
    return out;
}

void check_central(ValidationReport& r, const std::string& law, const AlgebraMap& leg) {
    const Algebra& t = leg.tgt();
    for (std::size_t i = 0; i < leg.src().dim(); ++i) {
        Vector x = leg.mat().col(i);
        if (t.left_mult(x) != t.right_mult(x)) r.add(law, {i});
    }
}

ValidationReport diagram_report(const TwoDiagram& d, bool with_cospans) {
    ValidationReport r;
    r.subject = "2-diagram";
    if (d.src.A != d.tgt.A || d.src.B != d.tgt.B) {
        r.add("same ends", {});
        return r;
    }
    if (with_cospans) {
        r.merge(validate_cospan(d.src), "source: ");
        r.merge(validate_cospan(d.tgt), "target: ");
    }
    const Algebra& s = d.src.apex;
    const Algebra& t = d.tgt.apex;
    if (d.M.left() != t || d.M.right() != s) {
        r.add("apex bimodule over (target, source)", {});
        return r;
    }
    r.merge(validate_bimodule(d.M), "apex: ");
    const std::size_t m = d.M.dim();
    if (d.f.rows() != m || d.f.cols() != s.dim() || d.g.rows() != m || d.g.cols() != t.dim()) {
        r.add("leg shapes", {});
        return r;
    }
    const auto& gs = s.generators();
    const auto& gt = t.generators();
    for (std::size_t j = 0; j < gs.size(); ++j)
        if (d.f * s.right_mult(gs[j]) != d.M.right_action(gs[j]) * d.f) r.add("f right linear", {j});
    for (std::size_t i = 0; i < gt.size(); ++i)
        if (d.g * t.left_mult(gt[i]) != d.M.left_action(gt[i]) * d.g) r.add("g left linear", {i});
    if (d.f * d.src.legA.mat() != d.g * d.tgt.legA.mat()) r.add("legs agree on A", {});
    if (d.f * d.src.legB.mat() != d.g * d.tgt.legB.mat()) r.add("legs agree on B", {});
    for (std::size_t x = 0; x < d.src.A.dim(); ++x)
        if (d.M.left_action(d.tgt.legA.mat().col(x)) != d.M.right_action(d.src.legA.mat().col(x)))
            r.add("A central in apex", {x});
    for (std::size_t y = 0; y < d.src.B.dim(); ++y)
        if (d.M.left_action(d.tgt.legB.mat().col(y)) != d.M.right_action(d.src.legB.mat().col(y)))
            r.add("B central in apex", {y});
    return r;
}

// Operators kron(xs[i], ys[j]) descended to q, indexed by ambient basis
// (i, j) of the quotient apexq, then restricted to the apex basis.
std::vector<Matrix> descended_actions(const Quotient& apexq, std::size_t ny_ops, const std::vector<Matrix>& xs,
                                      const std::vector<Matrix>& ys, const Quotient& q, const char* what) {
    std::vector<Matrix> amb(xs.size() * ny_ops);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ny_ops; ++j) amb[i * ny_ops + j] = q.descend(q.proj * kron(xs[i], ys[j]), what);
    for (std::size_t r = 0; r < apexq.relations.cols(); ++r) {
        Matrix acc(q.dim, q.dim);
        for (std::size_t k = 0; k < amb.size(); ++k) {
            const Scalar& c = apexq.relations(k, r);
            if (!c.is_zero()) acc += c * amb[k];
        }
        if (!acc.is_zero()) throw DescentError(std::string(what) + " does not descend to the composite apex");
    }
    std::vector<Matrix> out;
    for (std::size_t idx : free_indices(apexq)) out.push_back(amb[idx]);
    return out;
}

// Columns of x permuted so that (a, b, c, d) reads (a, c, b, d); dims of
// the four factors are na, nb, nc, nd.
Matrix middle_swap(const Matrix& x, std::size_t na, std::size_t nb, std::size_t nc, std::size_t nd) {
    Matrix out(x.rows(), na * nb * nc * nd);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t c = 0; c < nc; ++c)
                for (std::size_t d = 0; d < nd; ++d) {
                    std::size_t from = ((a * nb + b) * nc + c) * nd + d;
                    std::size_t to = ((a * nc + c) * nb + b) * nd + d;
                    for (std::size_t r = 0; r < x.rows(); ++r) out(r, from) = x(r, to);
                }
    return out;
}

Matrix stacked(const std::vector<Matrix>& ms, std::size_t rows) {
    if (ms.empty()) return Matrix(rows, 0);
    return hstack(ms);
}

}  // namespace

ValidationReport validate_cospan(const Cospan& c) {
    ValidationReport r;
    r.subject = "cospan";
    if (!c.A.is_commutative()) r.add("A commutative", {});
    if (!c.B.is_commutative()) r.add("B commutative", {});
    if (c.legA.src() != c.A || c.legA.tgt() != c.apex) r.add("legA endpoints", {});
    if (c.legB.src() != c.B || c.legB.tgt() != c.apex) r.add("legB endpoints", {});
    if (!r.clean()) return r;
    r.merge(validate_algebra(c.apex), "apex: ");
    r.merge(validate_map(c.legA), "legA: ");
    r.merge(validate_map(c.legB), "legB: ");
    check_central(r, "legA central", c.legA);
    check_central(r, "legB central", c.legB);
    return r;
}

Cospan make_cospan(const AlgebraMap& legA, const AlgebraMap& legB) {
    if (legA.tgt() != legB.tgt()) throw ShapeError("make_cospan: legs have different targets");
    Cospan c{legA.src(), legB.src(), legA.tgt(), legA, legB};
    validate_cospan(c).require();
    return c;
}

Cospan identity_cospan(const Algebra& a) { return make_cospan(identity_map(a), identity_map(a)); }

CospanComposite compose_cospans(const Cospan& second, const Cospan& first) {
    if (first.B != second.A) throw ShapeError("compose_cospans: middle algebras differ");
    const Algebra& t = first.apex;
    const Algebra& s = second.apex;
    const std::size_t dt = t.dim(), ds = s.dim();
    std::vector<Matrix> rops, lops;
    for (const auto& y : first.B.generators()) {
        rops.push_back(t.right_mult(first.legB(y)));
        lops.push_back(s.left_mult(second.legA(y)));
    }
    CospanComposite out;
    out.first = first;
    out.second = second;
    out.quot = tensor_quotient(dt, ds, rops, lops);
    const Quotient& q = out.quot;

    // The relations must form a two-sided ideal of T ⊗ S.
    const Matrix it = Matrix::identity(dt), is = Matrix::identity(ds);
    std::vector<Matrix> ops;
    for (const auto& x : t.generators()) {
        ops.push_back(kron(t.left_mult(x), is));
        ops.push_back(kron(t.right_mult(x), is));
    }
    for (const auto& x : s.generators()) {
        ops.push_back(kron(it, s.left_mult(x)));
        ops.push_back(kron(it, s.right_mult(x)));
    }
    for (const auto& op : ops)
        if (!(q.proj * (op * q.relations)).is_zero())
            throw DescentError("compose_cospans: multiplication does not descend");

    const std::vector<std::size_t> free = free_indices(q);
    const std::size_t d = q.dim;
    std::vector<Scalar> sc(d * d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t pp = 0; pp < d; ++pp) {
            std::size_t i = free[p] / ds, j = free[p] % ds;
            std::size_t ii = free[pp] / ds, jj = free[pp] % ds;
            Vector prod = q.proj.apply(kron(t.basis_product(i, ii), s.basis_product(j, jj)));
            for (std::size_t k = 0; k < d; ++k) sc[(p * d + pp) * d + k] = prod[k];
        }
    Algebra apex(d, std::move(sc), q.proj.apply(kron(t.unit(), s.unit())));
    AlgebraMap alpha(first.A, apex, q.proj * kron(first.legA.mat(), Matrix::column(s.unit())));
    AlgebraMap gamma(second.B, apex, q.proj * kron(Matrix::column(t.unit()), second.legB.mat()));
    out.result = Cospan{first.A, second.B, apex, alpha, gamma};
    validate_cospan(out.result).require();
    return out;
}

AlgebraMap pushout_universal(const CospanComposite& c, const AlgebraMap& w, const AlgebraMap& v) {
    const Algebra& t = c.first.apex;
    const Algebra& s = c.second.apex;
    if (w.src() != t || v.src() != s || w.tgt() != v.tgt())
        throw ShapeError("pushout_universal: maps do not fit the composite");
    const Algebra& target = w.tgt();
    if (w.mat() * c.first.legB.mat() != v.mat() * c.second.legA.mat())
        throw ValidationError("pushout_universal: maps disagree on the middle algebra");
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (target.multiply(w.mat().col(i), v.mat().col(j)) != target.multiply(v.mat().col(j), w.mat().col(i)))
                throw ValidationError("pushout_universal: images do not commute");
    Matrix amb(target.dim(), t.dim() * s.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            amb.set_col(i * s.dim() + j, target.multiply(w.mat().col(i), v.mat().col(j)));
    AlgebraMap u(c.result.apex, target, c.quot.descend(amb, "pushout map"));
    validate_map(u).require();
    // u is pinned down by the products of the two leg images, which span.
    const Algebra& apex = c.result.apex;
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            spanning.push_back(apex.multiply(c.quot.proj.apply(kron(unit_vector(t.dim(), i), s.unit())),
                                             c.quot.proj.apply(kron(t.unit(), unit_vector(s.dim(), j)))));
    if (rank(Matrix::from_columns(apex.dim(), spanning)) != apex.dim())
        throw Error("pushout_universal: leg images do not generate the apex");
    return u;
}

ValidationReport validate_2diagram(const TwoDiagram& d) { return diagram_report(d, true); }

TwoDiagram identity_2diagram(const Cospan& c) {
    const std::size_t n = c.apex.dim();
    return TwoDiagram{c, c, regular_bimodule(c.apex), Matrix::identity(n), Matrix::identity(n)};
}

TwoDiagram morphism_2diagram(const Cospan& src, const Cospan& tgt, const AlgebraMap& h) {
    if (h.src() != src.apex || h.tgt() != tgt.apex) throw ShapeError("morphism_2diagram: map does not join the apexes");
    Bimodule m = restrict_bimodule(regular_bimodule(tgt.apex), identity_map(tgt.apex), h);
    TwoDiagram d{src, tgt, m, h.mat(), Matrix::identity(tgt.apex.dim())};
    diagram_report(d, false).require();
    return d;
}

ValidationReport validate_3cell(const ThreeCell& c) {
    ValidationReport r;
    r.subject = "3-cell";
    if (!same_cospan(c.src.src, c.tgt.src) || !same_cospan(c.src.tgt, c.tgt.tgt)) {
        r.add("same cospans", {});
        return r;
    }
    if (c.delta.rows() != c.tgt.M.dim() || c.delta.cols() != c.src.M.dim()) {
        r.add("shape", {});
        return r;
    }
    r.merge(validate_bimodule_map({c.src.M, c.tgt.M, c.delta}), "delta: ");
    if (c.delta * c.src.f != c.tgt.f) r.add("delta f = f'", {});
    if (c.delta * c.src.g != c.tgt.g) r.add("delta g = g'", {});
    return r;
}

ThreeCell identity_3cell(const TwoDiagram& d) { return ThreeCell{d, d, Matrix::identity(d.M.dim())}; }

ThreeCell compose_3cells(const ThreeCell& second, const ThreeCell& first) {
    if (first.tgt.M != second.src.M) throw ShapeError("compose_3cells: middle 2-diagrams differ");
    return ThreeCell{first.src, second.tgt, second.delta * first.delta};
}

VerticalComposite vertical_compose(const TwoDiagram& upper, const TwoDiagram& lower) {
    if (!same_cospan(upper.src, lower.tgt)) throw ShapeError("vertical_compose: middle cospans differ");
    VerticalComposite out;
    out.upper = upper;
    out.lower = lower;
    out.tensor = tensor_over(upper.M, lower.M);
    const Vector& one = upper.src.apex.unit();
    const Quotient& q = out.tensor.quot;
    Matrix u = q.proj * kron(Matrix::column(upper.f.apply(one)), lower.f);
    Matrix v = q.proj * kron(upper.g, Matrix::column(lower.g.apply(one)));
    out.diagram = TwoDiagram{lower.src, upper.tgt, out.tensor.product, std::move(u), std::move(v)};
    diagram_report(out.diagram, false).require();
    return out;
}

HorizontalComposite horizontal_compose(const TwoDiagram& left, const TwoDiagram& right) {
    if (left.src.B != right.src.A) throw ShapeError("horizontal_compose: middle algebras differ");
    HorizontalComposite out;
    out.left = left;
    out.right = right;
    out.src = compose_cospans(right.src, left.src);
    out.tgt = compose_cospans(right.tgt, left.tgt);
    const Bimodule& m = left.M;
    const Bimodule& n = right.M;
    std::vector<Matrix> rops, lops;
    for (const auto& y : left.src.B.generators()) {
        rops.push_back(m.right_action(left.src.legB(y)));
        lops.push_back(n.left_action(right.tgt.legA(y)));
    }
    out.quot = tensor_quotient(m.dim(), n.dim(), rops, lops);
    std::vector<Matrix> lact = descended_actions(out.tgt.quot, n.lact().size(), m.lact(), n.lact(), out.quot,
                                                 "left action of the composite apex");
    std::vector<Matrix> ract = descended_actions(out.src.quot, n.ract().size(), m.ract(), n.ract(), out.quot,
                                                 "right action of the composite apex");
    Bimodule apex(out.tgt.result.apex, out.src.result.apex, out.quot.dim, std::move(lact), std::move(ract));
    Matrix f = tensor_maps(left.f, right.f, out.src.quot, out.quot);
    Matrix g = tensor_maps(left.g, right.g, out.tgt.quot, out.quot);
    out.diagram = TwoDiagram{out.src.result, out.tgt.result, apex, std::move(f), std::move(g)};
    diagram_report(out.diagram, false).require();
    return out;
}

Matrix vertical_3cells(const Matrix& upper, const Matrix& lower, const VerticalComposite& from,
                       const VerticalComposite& to) {
    return tensor_maps(upper, lower, from.tensor.quot, to.tensor.quot);
}

Matrix horizontal_3cells(const Matrix& left, const Matrix& right, const HorizontalComposite& from,
                         const HorizontalComposite& to) {
    return tensor_maps(left, right, from.quot, to.quot);
}

Beta beta(const TwoDiagram& Mu, const TwoDiagram& Nu, const TwoDiagram& M, const TwoDiagram& N) {
    Beta b;
    b.lower_h = horizontal_compose(M, N);
    b.upper_h = horizontal_compose(Mu, Nu);
    b.lhs = vertical_compose(b.upper_h.diagram, b.lower_h.diagram);
    b.left_v = vertical_compose(Mu, M);
    b.right_v = vertical_compose(Nu, N);
    b.rhs = horizontal_compose(b.left_v.diagram, b.right_v.diagram);
    const std::size_t mu = Mu.M.dim(), nu = Nu.M.dim(), m = M.M.dim(), n = N.M.dim();

    // (mu, nu, m, n) -> (mu, m, nu, n), then down the right-hand tower.
    Matrix fwd = b.rhs.quot.proj * kron(b.left_v.tensor.quot.proj, b.right_v.tensor.quot.proj);
    fwd = middle_swap(fwd, mu, nu, m, n);
    Quotient stage = kron(b.upper_h.quot, b.lower_h.quot);
    b.beta = b.lhs.tensor.quot.descend(stage.descend(fwd, "beta (inner stage)"), "beta (outer stage)");

    // (mu, m, nu, n) -> (mu, nu, m, n), then down the left-hand tower.
    Matrix back = b.lhs.tensor.quot.proj * kron(b.upper_h.quot.proj, b.lower_h.quot.proj);
    back = middle_swap(back, mu, m, nu, n);
    Quotient rstage = kron(b.left_v.tensor.quot, b.right_v.tensor.quot);
    b.beta_inverse = b.rhs.quot.descend(rstage.descend(back, "inverse beta (inner stage)"),
                                        "inverse beta (outer stage)");
    return b;
}

ThreeCell beta_cell(const Beta& b) { return ThreeCell{b.lhs.diagram, b.rhs.diagram, b.beta}; }

std::vector<CoherenceReport> check_beta(const Beta& b) {
    const TwoDiagram& s = b.lhs.diagram;
    const TwoDiagram& t = b.rhs.diagram;
    std::vector<CoherenceReport> out;
    out.push_back(CoherenceReport::compare("beta after inverse", "", b.beta * b.beta_inverse,
                                           Matrix::identity(t.M.dim())));
    out.push_back(CoherenceReport::compare("inverse after beta", "", b.beta_inverse * b.beta,
                                           Matrix::identity(s.M.dim())));
    out.push_back(CoherenceReport::compare("beta legs", "", hstack({b.beta * s.f, b.beta * s.g}), hstack({t.f, t.g})));
    std::vector<Matrix> lhs, rhs;
    const bool same_algebras = s.M.left() == t.M.left() && s.M.right() == t.M.right();
    if (same_algebras) {
        for (std::size_t i = 0; i < s.M.lact().size(); ++i) {
            lhs.push_back(b.beta * s.M.lact()[i]);
            rhs.push_back(t.M.lact()[i] * b.beta);
        }
        for (std::size_t j = 0; j < s.M.ract().size(); ++j) {
            lhs.push_back(b.beta * s.M.ract()[j]);
            rhs.push_back(t.M.ract()[j] * b.beta);
        }
    }
    auto lin = CoherenceReport::compare("beta bimodule map", "", stacked(lhs, t.M.dim()), stacked(rhs, t.M.dim()));
    lin.pass = lin.pass && same_algebras;
    out.push_back(std::move(lin));
    return out;
}

ThreeCellSpace three_cell_space(const TwoDiagram& d1, const TwoDiagram& d2) {
    if (!same_cospan(d1.src, d2.src) || !same_cospan(d1.tgt, d2.tgt))
        throw ShapeError("three_cell_space: 2-diagrams join different cospans");
    HomSpace h = hom_space(d1.M, d2.M);
    const std::size_t rows = d2.f.rows() * d2.f.cols() + d2.g.rows() * d2.g.cols();
    Matrix a(rows, h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Vector col = vec(h.basis[i] * d1.f);
        Vector cg = vec(h.basis[i] * d1.g);
        col.insert(col.end(), cg.begin(), cg.end());
        a.set_col(i, col);
    }
    Vector rhs = vec(d2.f);
    Vector rg = vec(d2.g);
    rhs.insert(rhs.end(), rg.begin(), rg.end());
    ThreeCellSpace out;
    if (auto c = solve(a, rhs)) out.particular = h.element(*c);
    if (out.particular) {
        Subspace k = kernel(a);
        for (std::size_t j = 0; j < k.dim(); ++j) out.directions.push_back(h.element(k.basis().col(j)));
    }
    return out;
}

std::optional<ThreeCell> find_3cell(const TwoDiagram& d1, const TwoDiagram& d2) {
    ThreeCellSpace sp = three_cell_space(d1, d2);
    if (!sp.particular) return std::nullopt;
    return ThreeCell{d1, d2, *sp.particular};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::CertifiedNone: return "none (certified)";
        case Verdict::ProbablyNone: return "none found (probabilistic)";
    }
    return "unknown";
}

InvertibleSearch find_invertible_3cell(const TwoDiagram& d1, const TwoDiagram& d2, Rng& rng,
                                       const SearchOptions& opts) {
    InvertibleSearch out;
    if (d1.M.dim() != d2.M.dim()) {
        if (!same_cospan(d1.src, d2.src) || !same_cospan(d1.tgt, d2.tgt))
            throw ShapeError("find_invertible_3cell: 2-diagrams join different cospans");
        return out;
    }
    ThreeCellSpace sp = three_cell_space(d1, d2);
    if (!sp.particular) return out;
    const std::size_t dim = d1.M.dim();
    const std::size_t k = sp.directions.size();
    out.parameters = k;
    auto at = [&](const Vector& t) {
        Matrix x = *sp.particular;
        for (std::size_t i = 0; i < k; ++i)
            if (!t[i].is_zero()) x += t[i] * sp.directions[i];
        return x;
    };
    auto accept = [&](Matrix x) {
        if (determinant(x).is_zero()) return false;
        out.cell = ThreeCell{d1, d2, std::move(x)};
        out.verdict = Verdict::Found;
        return true;
    };
    if (accept(at(Vector(k)))) return out;
    if (k == 0) return out;

    const std::int64_t bound = std::max<std::int64_t>(opts.bound, static_cast<std::int64_t>(2 * dim));
    for (std::size_t trial = 0; trial < opts.trials; ++trial)
        if (accept(at(random_point(k, bound, rng)))) return out;

    if (k <= opts.grid_max_params) {
        // det has degree <= dim in each parameter; vanishing on a grid of
        // dim + 1 values per parameter forces it to vanish identically.
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            Vector t(k);
            for (std::size_t i = 0; i < k; ++i) t[i] = Scalar(static_cast<long>(idx[i]));
            if (accept(at(t))) return out;
            std::size_t pos = 0;
            while (pos < k && ++idx[pos] > dim) idx[pos++] = 0;
            if (pos == k) break;
        }
        out.verdict = Verdict::CertifiedNone;
        return out;
    }
    out.verdict = Verdict::ProbablyNone;
    out.failure_log2 = failure_bound_log2(dim, opts);
    return out;
}

double failure_bound_log2(std::size_t dim, const SearchOptions& opts) {
    const std::int64_t bound = std::max<std::int64_t>(opts.bound, static_cast<std::int64_t>(2 * dim));
    return static_cast<double>(opts.trials) *
           std::log2(static_cast<double>(dim) / static_cast<double>(2 * bound + 1));
}

std::optional<InvertibleTwoCell> invert_2diagram(const TwoDiagram& d, Rng& rng, const SearchOptions& opts) {
    auto finv = inverse(d.f);
    auto ginv = inverse(d.g);
    if (!finv || !ginv) return std::nullopt;
    const Algebra& s = d.src.apex;
    const Algebra& t = d.tgt.apex;
    std::vector<Matrix> lact, ract;
    for (std::size_t i = 0; i < s.dim(); ++i) lact.push_back(d.f * s.left_mult(i) * *finv);
    for (std::size_t j = 0; j < t.dim(); ++j) ract.push_back(d.g * t.right_mult(j) * *ginv);
    Bimodule m(s, t, d.M.dim(), std::move(lact), std::move(ract));
    InvertibleTwoCell out;
    out.inverse = TwoDiagram{d.tgt, d.src, m, d.g, d.f};
    diagram_report(out.inverse, false).require();
    out.left = find_invertible_3cell(vertical_compose(out.inverse, d).diagram, identity_2diagram(d.src), rng, opts);
    out.right = find_invertible_3cell(vertical_compose(d, out.inverse).diagram, identity_2diagram(d.tgt), rng, opts);
    return out;
}

std::optional<CospanInverse> is_invertible_cospan(const Cospan& c, Rng& rng, const SearchOptions& opts) {
    auto a_inv = is_isomorphism(c.legA);
    auto b_inv = is_isomorphism(c.legB);
    if (!a_inv || !b_inv) return std::nullopt;
    CospanInverse out;
    out.inverse = Cospan{c.B, c.A, c.apex, c.legB, c.legA};

    CospanComposite left = compose_cospans(out.inverse, c);
    AlgebraMap u = pushout_universal(left, *a_inv, *a_inv);
    out.witness_left = morphism_2diagram(left.result, identity_cospan(c.A), u);

    CospanComposite right = compose_cospans(c, out.inverse);
    AlgebraMap w = pushout_universal(right, *b_inv, *b_inv);
    out.witness_right = morphism_2diagram(right.result, identity_cospan(c.B), w);

    auto l = invert_2diagram(out.witness_left, rng, opts);
    auto r = invert_2diagram(out.witness_right, rng, opts);
    if (!l || !r) return std::nullopt;
    out.left = std::move(*l);
    out.right = std::move(*r);
    return out;
}

Cospan functor_A_embed(const AlgebraMap& f) {
    if (!is_isomorphism(f)) throw ValidationError("functor_A_embed: map is not an isomorphism");
    return make_cospan(f, identity_map(f.tgt()));
}

TwoDiagram functor_A_composition(const AlgebraMap& f, const AlgebraMap& g) {
    CospanComposite comp = compose_cospans(functor_A_embed(g), functor_A_embed(f));
    AlgebraMap h = pushout_universal(comp, g, identity_map(g.tgt()));
    return morphism_2diagram(comp.result, functor_A_embed(compose_maps(g, f)), h);
}

CoherenceReport check_pentagon(const Bimodule& m, const Bimodule& n, const Bimodule& p, const Bimodule& q) {
    TensorResult mn = tensor_over(m, n);
    TensorResult mn_p = tensor_over(mn, p);
    TensorResult mnp_q = tensor_over(mn_p, q);
    TensorResult np = tensor_over(n, p);
    TensorResult m_np = tensor_over(m, np);
    TensorResult m_np_q = tensor_over(m_np, q);
    TensorResult np_q = tensor_over(np, q);
    TensorResult m__np_q = tensor_over(m, np_q);
    TensorResult pq = tensor_over(p, q);
    TensorResult n_pq = tensor_over(n, pq);
    TensorResult m_npq = tensor_over(m, n_pq);
    TensorResult mn_pq = tensor_over(mn, pq);

    Matrix a1 = tensor_maps(assoc_iso(mn_p, m_np).map.mat, Matrix::identity(q.dim()), mnp_q.quot, m_np_q.quot);
    Matrix a2 = assoc_iso(m_np_q, m__np_q).map.mat;
    Matrix a3 = tensor_maps(Matrix::identity(m.dim()), assoc_iso(np_q, n_pq).map.mat, m__np_q.quot, m_npq.quot);
    Matrix b1 = assoc_iso(mnp_q, mn_pq).map.mat;
    Matrix b2 = assoc_iso(mn_pq, m_npq).map.mat;
    std::string inst = "dims " + std::to_string(m.dim()) + "," + std::to_string(n.dim()) + "," +
                       std::to_string(p.dim()) + "," + std::to_string(q.dim());
    return CoherenceReport::compare("pentagon", inst, a3 * a2 * a1, b2 * b1);
}

CoherenceReport check_triangle(const Bimodule& m, const Bimodule& n) {
    Bimodule b = regular_bimodule(m.right());
    TensorResult mb = tensor_over(m, b);
    TensorResult mb_n = tensor_over(mb, n);
    TensorResult bn = tensor_over(b, n);
    TensorResult m_bn = tensor_over(m, bn);
    TensorResult mn = tensor_over(m, n);
    Matrix lhs = tensor_maps(Matrix::identity(m.dim()), unit_iso_left(bn).map.mat, m_bn.quot, mn.quot) *
                 assoc_iso(mb_n, m_bn).map.mat;
    Matrix rhs = tensor_maps(unit_iso_right(mb).map.mat, Matrix::identity(n.dim()), mb_n.quot, mn.quot);
    return CoherenceReport::compare("triangle", "dims " + std::to_string(m.dim()) + "," + std::to_string(n.dim()),
                                    lhs, rhs);
}

CoherenceReport check_pentagon(const Cospan& c1, const Cospan& c2, const Cospan& c3, const Cospan& c4) {
    const std::size_t d1 = c1.apex.dim(), d2 = c2.apex.dim(), d3 = c3.apex.dim(), d4 = c4.apex.dim();
    CospanComposite t12 = compose_cospans(c2, c1);
    CospanComposite t12_3 = compose_cospans(c3, t12.result);
    CospanComposite t12_3_4 = compose_cospans(c4, t12_3.result);
    CospanComposite t23 = compose_cospans(c3, c2);
    CospanComposite t1_23 = compose_cospans(t23.result, c1);
    CospanComposite t1_23_4 = compose_cospans(c4, t1_23.result);
    CospanComposite t23_4 = compose_cospans(c4, t23.result);
    CospanComposite t1__23_4 = compose_cospans(t23_4.result, c1);
    CospanComposite t34 = compose_cospans(c4, c3);
    CospanComposite t2_34 = compose_cospans(t34.result, c2);
    CospanComposite t1_234 = compose_cospans(t2_34.result, c1);
    CospanComposite t12_34 = compose_cospans(t34.result, t12.result);

    Matrix a1 = tensor_maps(assoc_matrix(t12.quot, t12_3.quot, t23.quot, t1_23.quot, d1, d2, d3),
                            Matrix::identity(d4), t12_3_4.quot, t1_23_4.quot);
    Matrix a2 = assoc_matrix(t1_23.quot, t1_23_4.quot, t23_4.quot, t1__23_4.quot, d1, t23.quot.dim, d4);
    Matrix a3 = tensor_maps(Matrix::identity(d1), assoc_matrix(t23.quot, t23_4.quot, t34.quot, t2_34.quot, d2, d3, d4),
                            t1__23_4.quot, t1_234.quot);
    Matrix b1 = assoc_matrix(t12_3.quot, t12_3_4.quot, t34.quot, t12_34.quot, t12.quot.dim, d3, d4);
    Matrix b2 = assoc_matrix(t12.quot, t12_34.quot, t2_34.quot, t1_234.quot, d1, d2, t34.quot.dim);
    Matrix lhs = a3 * a2 * a1;
    auto r = CoherenceReport::compare("cospan pentagon",
                                      "apex dims " + std::to_string(d1) + "," + std::to_string(d2) + "," +
                                          std::to_string(d3) + "," + std::to_string(d4),
                                      lhs, b2 * b1);
    // The associator must also respect the composite algebra structure.
    AlgebraMap assoc(t12_3_4.result.apex, t1_234.result.apex, lhs);
    if (!validate_map(assoc).clean()) r.pass = false;
    return r;
}

CoherenceReport check_triangle(const Cospan& c1, const Cospan& c2) {
    if (c1.B != c2.A) throw ShapeError("check_triangle: cospans are not composable");
    const Algebra& b = c1.B;
    const std::size_t d1 = c1.apex.dim(), d2 = c2.apex.dim(), db = b.dim();
    Cospan idb = identity_cospan(b);
    CospanComposite t1b = compose_cospans(idb, c1);
    CospanComposite t1b_2 = compose_cospans(c2, t1b.result);
    CospanComposite tb2 = compose_cospans(c2, idb);
    CospanComposite t1_b2 = compose_cospans(tb2.result, c1);
    CospanComposite t12 = compose_cospans(c2, c1);
    Matrix ramb(d1, d1 * db), lamb(d2, db * d2);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < db; ++j)
            ramb.set_col(i * db + j, c1.apex.multiply(unit_vector(d1, i), c1.legB.mat().col(j)));
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            lamb.set_col(i * d2 + j, c2.apex.multiply(c2.legA.mat().col(i), unit_vector(d2, j)));
    Matrix r = t1b.quot.descend(ramb, "right unit");
    Matrix l = tb2.quot.descend(lamb, "left unit");
    Matrix lhs = tensor_maps(Matrix::identity(d1), l, t1_b2.quot, t12.quot) *
                 assoc_matrix(t1b.quot, t1b_2.quot, tb2.quot, t1_b2.quot, d1, db, d2);
    Matrix rhs = tensor_maps(r, Matrix::identity(d2), t1b_2.quot, t12.quot);
    return CoherenceReport::compare("cospan triangle", "apex dims " + std::to_string(d1) + "," + std::to_string(d2),
                                    lhs, rhs);
}

std::vector<CoherenceReport> check_laxfunctor_axioms(const std::vector<TwoDiagram>& ms,
                                                     const std::vector<TwoDiagram>& ns) {
    if (ms.size() != 3 || ns.size() != 3) throw ShapeError("check_laxfunctor_axioms: need three rows");
    std::vector<CoherenceReport> out;

    // Associativity: rows 0, 1, 2 stacked bottom to top.
    HorizontalComposite x0 = horizontal_compose(ms[0], ns[0]);
    HorizontalComposite x1 = horizontal_compose(ms[1], ns[1]);
    HorizontalComposite x2 = horizontal_compose(ms[2], ns[2]);
    VerticalComposite x21 = vertical_compose(x2.diagram, x1.diagram);
    VerticalComposite x21_0 = vertical_compose(x21.diagram, x0.diagram);
    VerticalComposite x10 = vertical_compose(x1.diagram, x0.diagram);
    VerticalComposite x2_10 = vertical_compose(x2.diagram, x10.diagram);
    Matrix top = assoc_matrix(x21.tensor.quot, x21_0.tensor.quot, x10.tensor.quot, x2_10.tensor.quot,
                              x2.quot.dim, x1.quot.dim, x0.quot.dim);

    Beta b21 = beta(ms[2], ns[2], ms[1], ns[1]);
    Beta b21_0 = beta(b21.left_v.diagram, b21.right_v.diagram, ms[0], ns[0]);
    Matrix left = b21_0.beta * vertical_3cells(b21.beta, Matrix::identity(x0.quot.dim), x21_0, b21_0.lhs);

    Beta b10 = beta(ms[1], ns[1], ms[0], ns[0]);
    Beta b2_10 = beta(ms[2], ns[2], b10.left_v.diagram, b10.right_v.diagram);
    Matrix right = b2_10.beta * vertical_3cells(Matrix::identity(x2.quot.dim), b10.beta, x2_10, b2_10.lhs);

    auto assoc_of = [](const VerticalComposite& ab, const VerticalComposite& ab_c, const VerticalComposite& bc,
                       const VerticalComposite& a_bc) {
        return assoc_matrix(ab.tensor.quot, ab_c.tensor.quot, bc.tensor.quot, a_bc.tensor.quot, ab.upper.M.dim(),
                            ab.lower.M.dim(), ab_c.lower.M.dim());
    };
    Matrix am = assoc_of(b21.left_v, b21_0.left_v, b10.left_v, b2_10.left_v);
    Matrix an = assoc_of(b21.right_v, b21_0.right_v, b10.right_v, b2_10.right_v);
    Matrix bottom = horizontal_3cells(am, an, b21_0.rhs, b2_10.rhs);
    out.push_back(CoherenceReport::compare("lax associativity", "beta with associators", bottom * left, right * top));

    // Units: the identity unit is strict, and beta against identities is
    // the unit isomorphism.
    const TwoDiagram& m = ms[0];
    const TwoDiagram& n = ns[0];
    HorizontalComposite ids = horizontal_compose(identity_2diagram(m.tgt), identity_2diagram(n.tgt));
    TwoDiagram id = identity_2diagram(ids.diagram.src);
    auto flat = [](const TwoDiagram& d) {
        std::vector<Matrix> parts{d.f, d.g};
        parts.insert(parts.end(), d.M.lact().begin(), d.M.lact().end());
        parts.insert(parts.end(), d.M.ract().begin(), d.M.ract().end());
        return hstack(parts);
    };
    out.push_back(CoherenceReport::compare("strict unit", "C(id, id) = id", flat(ids.diagram), flat(id)));

    Beta bl = beta(identity_2diagram(m.tgt), identity_2diagram(n.tgt), m, n);
    Matrix lx = unit_iso_left(bl.lhs.tensor).map.mat;
    Matrix lm = unit_iso_left(bl.left_v.tensor).map.mat;
    Matrix ln = unit_iso_left(bl.right_v.tensor).map.mat;
    out.push_back(CoherenceReport::compare("lax left unit", "C(l, l) beta = l",
                                           horizontal_3cells(lm, ln, bl.rhs, bl.lower_h) * bl.beta, lx));

    Beta br = beta(m, n, identity_2diagram(m.src), identity_2diagram(n.src));
    Matrix rx = unit_iso_right(br.lhs.tensor).map.mat;
    Matrix rm = unit_iso_right(br.left_v.tensor).map.mat;
    Matrix rn = unit_iso_right(br.right_v.tensor).map.mat;
    out.push_back(CoherenceReport::compare("lax right unit", "C(r, r) beta = r",
                                           horizontal_3cells(rm, rn, br.rhs, br.upper_h) * br.beta, rx));
    return out;
}

CoherenceReport check_nattrans_axioms(const ThreeCell& phiU, const ThreeCell& psiU, const ThreeCell& phi,
                                      const ThreeCell& psi) {
    Beta b = beta(phiU.src, psiU.src, phi.src, psi.src);
    Beta bt = beta(phiU.tgt, psiU.tgt, phi.tgt, psi.tgt);
    Matrix upper = horizontal_3cells(phiU.delta, psiU.delta, b.upper_h, bt.upper_h);
    Matrix lower = horizontal_3cells(phi.delta, psi.delta, b.lower_h, bt.lower_h);
    Matrix lhs = bt.beta * vertical_3cells(upper, lower, b.lhs, bt.lhs);
    Matrix lv = vertical_3cells(phiU.delta, phi.delta, b.left_v, bt.left_v);
    Matrix rv = vertical_3cells(psiU.delta, psi.delta, b.right_v, bt.right_v);
    Matrix rhs = horizontal_3cells(lv, rv, b.rhs, bt.rhs) * b.beta;
    return CoherenceReport::compare("beta naturality", "", lhs, rhs);
}

CoherenceReport check_3cell_functoriality(const ThreeCell& a2, const ThreeCell& a1, const ThreeCell& b2,
                                          const ThreeCell& b1) {
    VerticalComposite v0 = vertical_compose(a1.src, b1.src);
    VerticalComposite v1 = vertical_compose(a1.tgt, b1.tgt);
    VerticalComposite v2 = vertical_compose(a2.tgt, b2.tgt);
    Matrix lhs = vertical_3cells(a2.delta * a1.delta, b2.delta * b1.delta, v0, v2);
    Matrix rhs = vertical_3cells(a2.delta, b2.delta, v1, v2) * vertical_3cells(a1.delta, b1.delta, v0, v1);
    return CoherenceReport::compare("3-cell functoriality", "", lhs, rhs);
}

}  // namespace centrum
