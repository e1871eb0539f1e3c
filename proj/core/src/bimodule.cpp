#include "centrum/bimodule.hpp"

#include "centrum/errors.hpp"

namespace centrum {

Bimodule::Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> lact,
                   std::vector<Matrix> ract) {
    if (lact.size() != left.dim() || ract.size() != right.dim())
        throw ShapeError("bimodule needs one action matrix per algebra basis element");
    for (const auto& m : lact)
        if (m.rows() != dim || m.cols() != dim) throw ShapeError("left action matrix has wrong size");
    for (const auto& m : ract)
        if (m.rows() != dim || m.cols() != dim) throw ShapeError("right action matrix has wrong size");
    auto d = std::make_shared<Data>();
    d->left = std::move(left);
    d->right = std::move(right);
    d->dim = dim;
    d->lact = std::move(lact);
    d->ract = std::move(ract);
    d_ = std::move(d);
}

Matrix Bimodule::left_action(const Vector& a) const { return combine(a, lact(), dim(), dim()); }
Matrix Bimodule::right_action(const Vector& b) const { return combine(b, ract(), dim(), dim()); }

bool operator==(const Bimodule& a, const Bimodule& b) {
    if (a.d_ == b.d_) return true;
    return a.dim() == b.dim() && a.left() == b.left() && a.right() == b.right() && a.lact() == b.lact() &&
           a.ract() == b.ract();
}

Matrix HomSpace::element(const Vector& coeffs) const {
    return combine(coeffs, basis, tgt.dim(), src.dim());
}

std::optional<Vector> HomSpace::coordinates(const Matrix& x) const {
    if (x.rows() != tgt.dim() || x.cols() != src.dim()) throw ShapeError("hom element has wrong size");
    return vectorized.coordinates(vec(x));
}

ValidationReport validate_bimodule(const Bimodule& m) {
    ValidationReport r;
    r.subject = "bimodule";
    const Algebra& a = m.left();
    const Algebra& b = m.right();
    const Matrix id = Matrix::identity(m.dim());
    if (m.left_action(a.unit()) != id) r.add("left-unital", {});
    if (m.right_action(b.unit()) != id) r.add("right-unital", {});
    // Multiplicativity on generator times basis element implies it on all
    // pairs, by induction on word length. A failure there is re-reported
    // over all basis pairs.
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    std::vector<Matrix> la, rb;
    for (const auto& g : ga) la.push_back(m.left_action(g));
    for (const auto& g : gb) rb.push_back(m.right_action(g));
    auto left_ok = [&](const Vector& x, const Matrix& lx, std::size_t j) {
        return m.left_action(a.multiply(x, unit_vector(a.dim(), j))) == lx * m.lact()[j];
    };
    auto right_ok = [&](const Vector& y, const Matrix& ry, std::size_t j) {
        return m.right_action(b.multiply(unit_vector(b.dim(), j), y)) == ry * m.ract()[j];
    };
    bool lgood = true, rgood = true;
    for (std::size_t i = 0; i < ga.size() && lgood; ++i)
        for (std::size_t j = 0; j < a.dim() && lgood; ++j) lgood = left_ok(ga[i], la[i], j);
    for (std::size_t i = 0; i < gb.size() && rgood; ++i)
        for (std::size_t j = 0; j < b.dim() && rgood; ++j) rgood = right_ok(gb[i], rb[i], j);
    if (!lgood)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (!left_ok(unit_vector(a.dim(), i), m.lact()[i], j)) r.add("left-multiplicative", {i, j});
    if (!rgood)
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (!right_ok(unit_vector(b.dim(), i), m.ract()[i], j)) r.add("right-antimultiplicative", {j, i});
    bool commute = true;
    for (std::size_t i = 0; i < la.size() && commute; ++i)
        for (std::size_t j = 0; j < rb.size() && commute; ++j) commute = la[i] * rb[j] == rb[j] * la[i];
    if (!commute)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (m.lact()[i] * m.ract()[j] != m.ract()[j] * m.lact()[i]) r.add("actions-commute", {i, j});
    return r;
}

ValidationReport validate_bimodule_map(const BimoduleMap& f) {
    ValidationReport r;
    r.subject = "bimodule map";
    if (f.src.left() != f.tgt.left() || f.src.right() != f.tgt.right()) {
        r.add("algebra-pair", {});
        return r;
    }
    if (f.mat.rows() != f.tgt.dim() || f.mat.cols() != f.src.dim()) {
        r.add("shape", {f.mat.rows(), f.mat.cols()});
        return r;
    }
    const auto& ga = f.src.left().generators();
    const auto& gb = f.src.right().generators();
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (f.mat * f.src.left_action(ga[i]) != f.tgt.left_action(ga[i]) * f.mat) r.add("left-linear", {i});
    for (std::size_t j = 0; j < gb.size(); ++j)
        if (f.mat * f.src.right_action(gb[j]) != f.tgt.right_action(gb[j]) * f.mat) r.add("right-linear", {j});
    return r;
}

Bimodule make_bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> lact,
                       std::vector<Matrix> ract) {
    Bimodule m(std::move(left), std::move(right), dim, std::move(lact), std::move(ract));
    validate_bimodule(m).require();
    return m;
}

BimoduleMap make_bimodule_map(const Bimodule& src, const Bimodule& tgt, const Matrix& mat) {
    BimoduleMap f{src, tgt, mat};
    validate_bimodule_map(f).require();
    return f;
}

BimoduleMap identity_bimodule_map(const Bimodule& m) { return {m, m, Matrix::identity(m.dim())}; }

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
    if (f.tgt != g.src) throw ShapeError("compose: bimodule maps are not composable");
    return {f.src, g.tgt, g.mat * f.mat};
}

Bimodule regular_bimodule(const Algebra& a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(a.left_mult(i));
        r.push_back(a.right_mult(i));
    }
    return Bimodule(a, a, a.dim(), std::move(l), std::move(r));
}

Bimodule restriction_bimodule(const AlgebraMap& f) {
    const Algebra& b = f.tgt();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < f.src().dim(); ++i) l.push_back(b.left_mult(f.mat().col(i)));
    for (std::size_t j = 0; j < b.dim(); ++j) r.push_back(b.right_mult(j));
    return Bimodule(f.src(), b, b.dim(), std::move(l), std::move(r));
}

Bimodule restrict_bimodule(const Bimodule& m, const AlgebraMap& f, const AlgebraMap& g) {
    if (f.tgt() != m.left() || g.tgt() != m.right()) throw ShapeError("restrict_bimodule: maps do not land in the acting algebras");
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < f.src().dim(); ++i) l.push_back(m.left_action(f.mat().col(i)));
    for (std::size_t j = 0; j < g.src().dim(); ++j) r.push_back(m.right_action(g.mat().col(j)));
    return Bimodule(f.src(), g.src(), m.dim(), std::move(l), std::move(r));
}

Bimodule direct_sum(const Bimodule& m, const Bimodule& n) {
    if (m.left() != n.left() || m.right() != n.right()) throw ShapeError("direct_sum: algebra pair mismatch");
    const std::size_t d = m.dim() + n.dim();
    auto blockdiag = [&](const Matrix& x, const Matrix& y) {
        Matrix z(d, d);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) z(m.dim() + i, m.dim() + j) = y(i, j);
        return z;
    };
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < m.lact().size(); ++i) l.push_back(blockdiag(m.lact()[i], n.lact()[i]));
    for (std::size_t j = 0; j < m.ract().size(); ++j) r.push_back(blockdiag(m.ract()[j], n.ract()[j]));
    return Bimodule(m.left(), m.right(), d, std::move(l), std::move(r));
}

Bimodule change_basis(const Bimodule& m, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv || p.rows() != m.dim()) throw ShapeError("change_basis: matrix is not an invertible basis change");
    std::vector<Matrix> l, r;
    for (const auto& x : m.lact()) l.push_back(*pinv * x * p);
    for (const auto& x : m.ract()) r.push_back(*pinv * x * p);
    return Bimodule(m.left(), m.right(), m.dim(), std::move(l), std::move(r));
}

Bimodule column_module(std::size_t n) {
    Algebra mn = full_matrix_algebra(n);
    std::vector<Matrix> l;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = 1;
            l.push_back(e);
        }
    return Bimodule(mn, ground_field(), n, std::move(l), {Matrix::identity(n)});
}

Bimodule row_module(std::size_t n) {
    Algebra mn = full_matrix_algebra(n);
    std::vector<Matrix> r;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // v -> v E_ij on row vectors is E_ji on columns.
            Matrix e(n, n);
            e(j, i) = 1;
            r.push_back(e);
        }
    return Bimodule(ground_field(), mn, n, {Matrix::identity(n)}, std::move(r));
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n) {
    if (m.left() != n.left() || m.right() != n.right()) throw ShapeError("hom_space: algebra pair mismatch");
    const std::size_t dm = m.dim(), dn = n.dim();
    // X (dn x dm) with X L = L' X and X R = R' X, in row-major vec coordinates.
    std::vector<Matrix> eqs;
    const Matrix in = Matrix::identity(dn), im = Matrix::identity(dm);
    for (const auto& g : m.left().generators())
        eqs.push_back(kron(in, m.left_action(g).transpose()) - kron(n.left_action(g), im));
    for (const auto& g : m.right().generators())
        eqs.push_back(kron(in, m.right_action(g).transpose()) - kron(n.right_action(g), im));
    HomSpace h;
    h.src = m;
    h.tgt = n;
    h.vectorized = eqs.empty() ? Subspace::span(Matrix::identity(dn * dm)) : kernel(vstack(eqs));
    for (std::size_t a = 0; a < h.vectorized.dim(); ++a) h.basis.push_back(unvec(h.vectorized.basis().col(a), dn, dm));
    return h;
}

EndAlgebra end_algebra(const Bimodule& m) {
    HomSpace h = hom_space(m, m);
    const std::size_t d = h.dim();
    std::vector<Scalar> sc(d * d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto x = h.coordinates(h.basis[a] * h.basis[b]);
            if (!x) throw ValidationError("end_algebra: composition left the hom space");
            for (std::size_t c = 0; c < d; ++c) sc[(a * d + b) * d + c] = (*x)[c];
        }
    auto u = h.coordinates(Matrix::identity(m.dim()));
    if (!u) throw ValidationError("end_algebra: identity is not a bimodule map");
    Algebra alg(d, std::move(sc), *u, "End");
    validate_algebra(alg).require();
    return {alg, h};
}

Bimodule hom_bimodule(const HomSpace& h, const EndAlgebra& end_tgt, const EndAlgebra& end_src) {
    if (end_tgt.space.src != h.tgt || end_src.space.src != h.src)
        throw ShapeError("hom_bimodule: endomorphism algebras do not match the hom space");
    const std::size_t d = h.dim();
    auto action = [&](auto apply, std::size_t count) {
        std::vector<Matrix> ops;
        for (std::size_t c = 0; c < count; ++c) {
            Matrix op(d, d);
            for (std::size_t a = 0; a < d; ++a) {
                auto x = h.coordinates(apply(c, h.basis[a]));
                if (!x) throw ValidationError("hom_bimodule: action left the hom space");
                op.set_col(a, *x);
            }
            ops.push_back(std::move(op));
        }
        return ops;
    };
    auto l = action([&](std::size_t c, const Matrix& x) { return end_tgt.space.basis[c] * x; }, end_tgt.alg.dim());
    auto r = action([&](std::size_t c, const Matrix& x) { return x * end_src.space.basis[c]; }, end_src.alg.dim());
    return Bimodule(end_tgt.alg, end_src.alg, d, std::move(l), std::move(r));
}

std::vector<Vector> algebra_generators(const Algebra& a) { return a.generators(); }

Quotient tensor_quotient(std::size_t dim_x, std::size_t dim_y, const std::vector<Matrix>& right_ops,
                         const std::vector<Matrix>& left_ops) {
    if (right_ops.size() != left_ops.size()) throw ShapeError("tensor_quotient: operator count mismatch");
    std::vector<Vector> rels;
    for (std::size_t k = 0; k < right_ops.size(); ++k) {
        const Matrix& rx = right_ops[k];
        const Matrix& ly = left_ops[k];
        for (std::size_t p = 0; p < dim_x; ++p)
            for (std::size_t q = 0; q < dim_y; ++q) {
                Vector v(dim_x * dim_y);
                for (std::size_t p2 = 0; p2 < dim_x; ++p2) {
                    const Scalar& c = rx(p2, p);
                    if (!c.is_zero()) v[p2 * dim_y + q] += c;
                }
                for (std::size_t q2 = 0; q2 < dim_y; ++q2) {
                    const Scalar& c = ly(q2, q);
                    if (!c.is_zero()) v[p * dim_y + q2] -= c;
                }
                rels.push_back(std::move(v));
            }
    }
    return quotient_by_rows(dim_x * dim_y, rels);
}

TensorResult tensor_over(const Bimodule& m, const Bimodule& n) {
    if (m.right() != n.left()) throw ShapeError("tensor_over: middle algebras differ");
    const Algebra& b = m.right();
    std::vector<Matrix> rops, lops;
    for (const auto& g : b.generators()) {
        rops.push_back(m.right_action(g));
        lops.push_back(n.left_action(g));
    }
    TensorResult t;
    t.quot = tensor_quotient(m.dim(), n.dim(), rops, lops);
    t.leftFactor = m;
    t.rightFactor = n;
    const Matrix im = Matrix::identity(m.dim()), in = Matrix::identity(n.dim());
    std::vector<Matrix> l, r;
    for (const auto& x : m.lact()) l.push_back(t.quot.descend(t.quot.proj * kron(x, in), "left action"));
    for (const auto& x : n.ract()) r.push_back(t.quot.descend(t.quot.proj * kron(im, x), "right action"));
    t.product = Bimodule(m.left(), n.right(), t.quot.dim, std::move(l), std::move(r));
    return t;
}

TensorResult tensor_over(const TensorResult& mn, const Bimodule& p) {
    TensorResult t = tensor_over(mn.product, p);
    t.leftTower = std::make_shared<const TensorResult>(mn);
    return t;
}

TensorResult tensor_over(const Bimodule& m, const TensorResult& np) {
    TensorResult t = tensor_over(m, np.product);
    t.rightTower = std::make_shared<const TensorResult>(np);
    return t;
}

TensorResult tensor_over(const TensorResult& mn, const TensorResult& pq) {
    TensorResult t = tensor_over(mn.product, pq.product);
    t.leftTower = std::make_shared<const TensorResult>(mn);
    t.rightTower = std::make_shared<const TensorResult>(pq);
    return t;
}

Matrix tensor_maps(const Matrix& a, const Matrix& b, const Quotient& src, const Quotient& tgt) {
    Matrix k = kron(a, b);
    if (k.rows() != tgt.ambient || k.cols() != src.ambient) throw ShapeError("tensor_maps: shapes do not match the quotients");
    return src.descend(tgt.proj * k, "tensor of maps");
}

BimoduleMap induced_map(const BimoduleMap& phi, const BimoduleMap& psi, const TensorResult& t_src,
                        const TensorResult& t_tgt) {
    if (phi.src != t_src.leftFactor || psi.src != t_src.rightFactor || phi.tgt != t_tgt.leftFactor ||
        psi.tgt != t_tgt.rightFactor)
        throw ShapeError("induced_map: maps do not match the tensor factors");
    return {t_src.product, t_tgt.product, tensor_maps(phi.mat, psi.mat, t_src.quot, t_tgt.quot)};
}

namespace {

BimoduleIso verified_iso(const Bimodule& src, const Bimodule& tgt, Matrix fwd, Matrix back, const char* what) {
    if (!(fwd * back).is_identity() || !(back * fwd).is_identity())
        throw DescentError(std::string(what) + ": maps are not mutually inverse");
    BimoduleIso iso{{src, tgt, std::move(fwd)}, {tgt, src, std::move(back)}};
    validate_bimodule_map(iso.map).require();
    validate_bimodule_map(iso.inverse).require();
    return iso;
}

}  // namespace

BimoduleIso unit_iso_left(const TensorResult& t) {
    const Bimodule& a = t.leftFactor;
    const Bimodule& m = t.rightFactor;
    if (a != regular_bimodule(a.left())) throw ShapeError("unit_iso_left: left factor is not the regular bimodule");
    const std::size_t da = a.dim(), dm = m.dim();
    Matrix act(dm, da * dm);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dm; ++j) act.set_col(i * dm + j, m.lact()[i].col(j));
    Matrix fwd = t.quot.descend(act, "left unit map");
    Matrix back = t.quot.proj * kron(Matrix::column(a.left().unit()), Matrix::identity(dm));
    return verified_iso(t.product, m, std::move(fwd), std::move(back), "unit_iso_left");
}

BimoduleIso unit_iso_right(const TensorResult& t) {
    const Bimodule& m = t.leftFactor;
    const Bimodule& b = t.rightFactor;
    if (b != regular_bimodule(b.right())) throw ShapeError("unit_iso_right: right factor is not the regular bimodule");
    const std::size_t dm = m.dim(), db = b.dim();
    Matrix act(dm, dm * db);
    for (std::size_t j = 0; j < dm; ++j)
        for (std::size_t i = 0; i < db; ++i) act.set_col(j * db + i, m.ract()[i].col(j));
    Matrix fwd = t.quot.descend(act, "right unit map");
    Matrix back = t.quot.proj * kron(Matrix::identity(dm), Matrix::column(b.right().unit()));
    return verified_iso(t.product, m, std::move(fwd), std::move(back), "unit_iso_right");
}

Matrix assoc_matrix(const Quotient& inner_left, const Quotient& outer_left, const Quotient& inner_right,
                    const Quotient& outer_right, std::size_t m, std::size_t n, std::size_t p) {
    if (inner_left.ambient != m * n || inner_right.ambient != n * p || outer_left.ambient != inner_left.dim * p ||
        outer_right.ambient != m * inner_right.dim)
        throw ShapeError("assoc: quotient towers do not match the factor dimensions");
    // The identity of M⊗N⊗P pushed into the right tower.
    Matrix to_right = outer_right.proj * kron(Matrix::identity(m), inner_right.proj);
    Quotient stage = kron(inner_left, Quotient::identity(p));
    Matrix g = stage.descend(to_right, "associator (inner stage)");
    return outer_left.descend(g, "associator (outer stage)");
}

BimoduleIso assoc_iso(const TensorResult& t_left, const TensorResult& t_right) {
    if (!t_left.leftTower || !t_right.rightTower) throw ShapeError("assoc_iso: tensor towers are not recorded");
    const TensorResult& mn = *t_left.leftTower;
    const TensorResult& np = *t_right.rightTower;
    if (mn.leftFactor != t_right.leftFactor || mn.rightFactor != np.leftFactor || t_left.rightFactor != np.rightFactor)
        throw ShapeError("assoc_iso: factors differ");
    const std::size_t m = mn.leftFactor.dim(), n = mn.rightFactor.dim(), p = np.rightFactor.dim();
    Matrix fwd = assoc_matrix(mn.quot, t_left.quot, np.quot, t_right.quot, m, n, p);
    // Inverse through the mirrored towers: descend N⊗P first, then the outer quotient.
    Matrix to_left = t_left.quot.proj * kron(mn.quot.proj, Matrix::identity(p));
    Quotient stage = kron(Quotient::identity(m), np.quot);
    Matrix back = t_right.quot.descend(stage.descend(to_left, "inverse associator (inner stage)"),
                                       "inverse associator (outer stage)");
    return verified_iso(t_left.product, t_right.product, std::move(fwd), std::move(back), "assoc_iso");
}

bool interchange_check(const BimoduleMap& xi, const BimoduleMap& zeta) {
    TensorResult mn = tensor_over(xi.src, zeta.src);
    TensorResult mn2 = tensor_over(xi.src, zeta.tgt);
    TensorResult m2n = tensor_over(xi.tgt, zeta.src);
    TensorResult m2n2 = tensor_over(xi.tgt, zeta.tgt);
    BimoduleMap lhs = compose(induced_map(xi, identity_bimodule_map(zeta.tgt), mn2, m2n2),
                              induced_map(identity_bimodule_map(xi.src), zeta, mn, mn2));
    BimoduleMap rhs = compose(induced_map(identity_bimodule_map(xi.tgt), zeta, m2n, m2n2),
                              induced_map(xi, identity_bimodule_map(zeta.src), mn, m2n));
    return lhs.mat == rhs.mat;
}

Matrix compose_hom(const HomSpace& hNP, const HomSpace& hMN, const HomSpace& hMP) {
    if (hNP.src != hMN.tgt || hMP.src != hMN.src || hMP.tgt != hNP.tgt) throw ShapeError("compose_hom: hom spaces are not composable");
    Matrix c(hMP.dim(), hNP.dim() * hMN.dim());
    for (std::size_t a = 0; a < hNP.dim(); ++a)
        for (std::size_t b = 0; b < hMN.dim(); ++b) {
            auto x = hMP.coordinates(hNP.basis[a] * hMN.basis[b]);
            if (!x) throw ValidationError("compose_hom: composite is not a bimodule map");
            c.set_col(a * hMN.dim() + b, *x);
        }
    return c;
}

CompBar comp_bar(const HomSpace& hNP, const HomSpace& hMN) {
    if (hNP.src != hMN.tgt) throw ShapeError("comp_bar: middle bimodule mismatch");
    EndAlgebra endM = end_algebra(hMN.src);
    EndAlgebra endN = end_algebra(hMN.tgt);
    EndAlgebra endP = end_algebra(hNP.tgt);
    Bimodule np = hom_bimodule(hNP, endP, endN);
    Bimodule mn = hom_bimodule(hMN, endN, endM);
    CompBar out{tensor_over(np, mn), hom_space(hMN.src, hNP.tgt), Matrix()};
    out.map = out.domain.quot.descend(compose_hom(hNP, hMN, out.target), "comp_bar");
    return out;
}

}  // namespace centrum
