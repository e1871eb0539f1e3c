#include "centrum/fullcenter.hpp"

#include "centrum/errors.hpp"

namespace centrum {
namespace {

Vector coords_or_throw(const std::optional<Vector>& x, const char* what) {
    if (!x) throw ValidationError(std::string(what) + ": element outside the expected subspace");
    return *x;
}

// Matrix on coordinates of h of the linear map x -> fn(x), landing in out.
template <class Fn>
Matrix hom_operator(const HomSpace& h, const HomSpace& out, Fn fn, const char* what) {
    Matrix op(out.dim(), h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a) op.set_col(a, coords_or_throw(out.coordinates(fn(h.basis[a])), what));
    return op;
}

// Generators of the center of b, as elements of b.
std::vector<Vector> center_generators(const Algebra& b) {
    Subalgebra z = center(b);
    std::vector<Vector> out;
    for (const auto& g : z.induced.generators()) out.push_back(z.incl.apply(g));
    return out;
}

// Composition [N,P] ⊗_{End N} [M,N] -> [M,P] on the apex of a vertical
// composite of two hom 2-diagrams.
Matrix composition_on(const VerticalComposite& v, const HomSpace& upper, const HomSpace& lower,
                      const HomSpace& target) {
    return v.tensor.quot.descend(compose_hom(upper, lower, target), "composition");
}

CoherenceReport flat_compare(std::string law, std::string inst, const std::vector<Matrix>& lhs,
                             const std::vector<Matrix>& rhs) {
    if (lhs.size() != rhs.size()) return {std::move(law), std::move(inst), Matrix(), Matrix(), false};
    bool shapes = true;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        shapes = shapes && lhs[i].rows() == rhs[i].rows() && lhs[i].cols() == rhs[i].cols();
    if (!shapes) return {std::move(law), std::move(inst), Matrix(), Matrix(), false};
    return CoherenceReport::compare(std::move(law), std::move(inst), hstack(lhs), hstack(rhs));
}

}  // namespace

ZObjectResult Z_object(const Algebra& a) { return {a, center(a)}; }

ZMorphismResult Z_hom(const AlgebraMap& f) {
    ZMorphismResult out;
    out.za = Z_object(f.src());
    out.zb = Z_object(f.tgt());
    Subalgebra cz = centralizer(f);
    const Matrix& ia = out.za.center.incl;
    const Matrix& ib = out.zb.center.incl;
    Matrix la(cz.dim(), ia.cols()), lb(cz.dim(), ib.cols());
    for (std::size_t i = 0; i < ia.cols(); ++i)
        la.set_col(i, coords_or_throw(cz.coordinates(f(ia.col(i))), "Z_hom legA"));
    for (std::size_t j = 0; j < ib.cols(); ++j) lb.set_col(j, coords_or_throw(cz.coordinates(ib.col(j)), "Z_hom legB"));
    out.cospan = make_cospan(AlgebraMap(out.za.center.induced, cz.induced, la),
                             AlgebraMap(out.zb.center.induced, cz.induced, lb));
    out.centralizer = std::move(cz);
    return out;
}

ZMorphismResult Z_bimodule(const Bimodule& m) {
    ZMorphismResult out;
    out.za = Z_object(m.left());
    out.zb = Z_object(m.right());
    EndAlgebra e = end_algebra(m);
    const Matrix& ia = out.za.center.incl;
    const Matrix& ib = out.zb.center.incl;
    Matrix la(e.alg.dim(), ia.cols()), lb(e.alg.dim(), ib.cols());
    for (std::size_t i = 0; i < ia.cols(); ++i)
        la.set_col(i, coords_or_throw(e.space.coordinates(m.left_action(ia.col(i))), "Z_bimodule legA"));
    for (std::size_t j = 0; j < ib.cols(); ++j)
        lb.set_col(j, coords_or_throw(e.space.coordinates(m.right_action(ib.col(j))), "Z_bimodule legB"));
    out.cospan = make_cospan(AlgebraMap(out.za.center.induced, e.alg, la), AlgebraMap(out.zb.center.induced, e.alg, lb));
    out.end = std::move(e);
    return out;
}

ZAgreement Z_agreement(const AlgebraMap& f) {
    ZAgreement out;
    out.by_bimodule = Z_bimodule(restriction_bimodule(f));
    out.by_map = Z_hom(f);
    const HomSpace& h = out.by_bimodule.end->space;
    const Subalgebra& cz = *out.by_map.centralizer;
    Matrix ev(cz.dim(), h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a)
        ev.set_col(a, coords_or_throw(cz.coordinates(h.basis[a].apply(f.tgt().unit())), "evaluation at the unit"));
    out.iso = AlgebraMap(out.by_bimodule.cospan.apex, out.by_map.cospan.apex, ev);
    out.is_iso = validate_map(out.iso).clean() && ev.square() && inverse(ev).has_value();
    out.legs_commute = ev * out.by_bimodule.cospan.legA.mat() == out.by_map.cospan.legA.mat() &&
                       ev * out.by_bimodule.cospan.legB.mat() == out.by_map.cospan.legB.mat();
    return out;
}

Z2CellResult Z_2cell(const BimoduleMap& phi) {
    Z2CellResult out;
    out.phi = phi;
    out.zm = Z_bimodule(phi.src);
    out.zn = Z_bimodule(phi.tgt);
    out.hom = hom_space(phi.src, phi.tgt);
    const EndAlgebra& em = *out.zm.end;
    const EndAlgebra& en = *out.zn.end;
    Bimodule apex = hom_bimodule(out.hom, en, em);
    Matrix f = hom_operator(em.space, out.hom, [&](const Matrix& x) { return phi.mat * x; }, "phi∘-");
    Matrix g = hom_operator(en.space, out.hom, [&](const Matrix& y) { return y * phi.mat; }, "-∘phi");
    out.diagram = TwoDiagram{out.zm.cospan, out.zn.cospan, apex, std::move(f), std::move(g)};
    validate_2diagram(out.diagram).require();
    return out;
}

MultTransform mult_transform(const AlgebraMap& f, const AlgebraMap& g) {
    MultTransform out;
    out.zf = Z_hom(f);
    out.zg = Z_hom(g);
    out.zgf = Z_hom(compose_maps(g, f));
    out.domain = compose_cospans(out.zg.cospan, out.zf.cospan);
    const Subalgebra& cf = *out.zf.centralizer;
    const Subalgebra& cg = *out.zg.centralizer;
    const Subalgebra& cgf = *out.zgf.centralizer;
    const Algebra& c = g.tgt();
    Matrix amb(cgf.dim(), cf.dim() * cg.dim());
    for (std::size_t i = 0; i < cf.dim(); ++i)
        for (std::size_t j = 0; j < cg.dim(); ++j)
            amb.set_col(i * cg.dim() + j, coords_or_throw(cgf.coordinates(c.multiply(g(cf.incl.col(i)), cg.incl.col(j))),
                                                          "mult_transform"));
    out.m = AlgebraMap(out.domain.result.apex, out.zgf.cospan.apex, out.domain.quot.descend(amb, "mult_transform"));
    validate_map(out.m).require();
    out.diagram = morphism_2diagram(out.domain.result, out.zgf.cospan, out.m);
    return out;
}

NMap n_general(const TensorResult& src, const TensorResult& tgt) {
    const Bimodule& m = src.leftFactor;
    const Bimodule& n = src.rightFactor;
    const Bimodule& m2 = tgt.leftFactor;
    const Bimodule& n2 = tgt.rightFactor;
    if (m.right() != m2.right() || n.left() != n2.left() || m.left() != m2.left() || n.right() != n2.right())
        throw ShapeError("n_general: tensor products over different algebras");
    NMap out;
    out.src = src;
    out.tgt = tgt;
    out.left = hom_space(m, m2);
    out.right = hom_space(n, n2);
    out.target = hom_space(src.product, tgt.product);
    std::vector<Matrix> rops, lops;
    for (const auto& z : center_generators(m.right())) {
        Matrix rz = m.right_action(z);
        Matrix lz = n2.left_action(z);
        rops.push_back(hom_operator(out.left, out.left, [&](const Matrix& x) { return x * rz; }, "n_general"));
        lops.push_back(hom_operator(out.right, out.right, [&](const Matrix& y) { return lz * y; }, "n_general"));
    }
    out.quot = tensor_quotient(out.left.dim(), out.right.dim(), rops, lops);
    Matrix amb(out.target.dim(), out.left.dim() * out.right.dim());
    for (std::size_t a = 0; a < out.left.dim(); ++a)
        for (std::size_t b = 0; b < out.right.dim(); ++b) {
            Matrix x = tensor_maps(out.left.basis[a], out.right.basis[b], src.quot, tgt.quot);
            amb.set_col(a * out.right.dim() + b, coords_or_throw(out.target.coordinates(x), "n_general"));
        }
    out.map = out.quot.descend(amb, "n_general");
    return out;
}

NMap n_general(const Bimodule& m, const Bimodule& m2, const Bimodule& n, const Bimodule& n2) {
    return n_general(tensor_over(m, n), tensor_over(m2, n2));
}

MultTransformBimodule mult_transform_bimodule(const TensorResult& mn) {
    MultTransformBimodule out;
    out.zm = Z_bimodule(mn.leftFactor);
    out.zn = Z_bimodule(mn.rightFactor);
    out.zmn = Z_bimodule(mn.product);
    out.domain = compose_cospans(out.zn.cospan, out.zm.cospan);
    out.n = n_general(mn, mn);
    if (out.n.quot.relations != out.domain.quot.relations)
        throw Error("mult_transform_bimodule: quotient presentations disagree");
    out.m = AlgebraMap(out.domain.result.apex, out.zmn.cospan.apex, out.n.map);
    validate_map(out.m).require();
    out.diagram = morphism_2diagram(out.domain.result, out.zmn.cospan, out.m);
    return out;
}

MultTransformBimodule mult_transform_bimodule(const Bimodule& m, const Bimodule& n) {
    return mult_transform_bimodule(tensor_over(m, n));
}

std::vector<CoherenceReport> check_n_linearity(const NMap& n) {
    const Bimodule& m = n.src.leftFactor;
    const Bimodule& nn = n.src.rightFactor;
    const Bimodule& m2 = n.tgt.leftFactor;
    const Bimodule& n2 = n.tgt.rightFactor;
    std::vector<Matrix> lhs_l, rhs_l, lhs_r, rhs_r;
    const Matrix ir = Matrix::identity(n.right.dim()), il = Matrix::identity(n.left.dim());
    auto left_side = [&](const Matrix& on_left, const Matrix& on_right, const Matrix& on_target) {
        Matrix d = n.quot.descend(n.quot.proj * kron(on_left, on_right), "n linearity");
        lhs_l.push_back(n.map * d);
        rhs_l.push_back(on_target * n.map);
    };
    auto right_side = [&](const Matrix& on_left, const Matrix& on_right, const Matrix& on_target) {
        Matrix d = n.quot.descend(n.quot.proj * kron(on_left, on_right), "n linearity");
        lhs_r.push_back(n.map * d);
        rhs_r.push_back(on_target * n.map);
    };
    const Matrix jm2 = Matrix::identity(m2.dim()), jn2 = Matrix::identity(n2.dim());
    const Matrix jm = Matrix::identity(m.dim()), jn = Matrix::identity(nn.dim());
    for (const auto& e : hom_space(m2, m2).basis) {
        Matrix on_left = hom_operator(n.left, n.left, [&](const Matrix& x) { return e * x; }, "n linearity");
        Matrix t = tensor_maps(e, jn2, n.tgt.quot, n.tgt.quot);
        left_side(on_left, ir, hom_operator(n.target, n.target, [&](const Matrix& x) { return t * x; }, "n linearity"));
    }
    for (const auto& e : hom_space(n2, n2).basis) {
        Matrix on_right = hom_operator(n.right, n.right, [&](const Matrix& y) { return e * y; }, "n linearity");
        Matrix t = tensor_maps(jm2, e, n.tgt.quot, n.tgt.quot);
        left_side(il, on_right, hom_operator(n.target, n.target, [&](const Matrix& x) { return t * x; }, "n linearity"));
    }
    for (const auto& e : hom_space(m, m).basis) {
        Matrix on_left = hom_operator(n.left, n.left, [&](const Matrix& x) { return x * e; }, "n linearity");
        Matrix t = tensor_maps(e, jn, n.src.quot, n.src.quot);
        right_side(on_left, ir, hom_operator(n.target, n.target, [&](const Matrix& x) { return x * t; }, "n linearity"));
    }
    for (const auto& e : hom_space(nn, nn).basis) {
        Matrix on_right = hom_operator(n.right, n.right, [&](const Matrix& y) { return y * e; }, "n linearity");
        Matrix t = tensor_maps(jm, e, n.src.quot, n.src.quot);
        right_side(il, on_right, hom_operator(n.target, n.target, [&](const Matrix& x) { return x * t; }, "n linearity"));
    }
    return {flat_compare("n left linear", "", lhs_l, rhs_l), flat_compare("n right linear", "", lhs_r, rhs_r)};
}

CoherenceReport check_n_associativity(const Bimodule& m, const Bimodule& m2, const Bimodule& n, const Bimodule& n2,
                                      const Bimodule& p, const Bimodule& p2) {
    TensorResult mn = tensor_over(m, n), mn2 = tensor_over(m2, n2);
    TensorResult np = tensor_over(n, p), np2 = tensor_over(n2, p2);
    TensorResult mn_p = tensor_over(mn, p), mn_p2 = tensor_over(mn2, p2);
    TensorResult m_np = tensor_over(m, np), m_np2 = tensor_over(m2, np2);
    NMap n12 = n_general(mn, mn2);
    NMap n23 = n_general(np, np2);
    NMap n12_3 = n_general(mn_p, mn_p2);
    NMap n1_23 = n_general(m_np, m_np2);
    const std::size_t d1 = n12.left.dim(), d2 = n12.right.dim(), d3 = n23.right.dim();

    // ([M,M'] ⊗ [N,N']) ⊗_{Z(C)} [P,P'] and [M,M'] ⊗_{Z(B)} ([N,N'] ⊗ [P,P']).
    std::vector<Matrix> rops, lops;
    for (const auto& z : center_generators(n.right())) {
        Matrix rz = n.right_action(z);
        Matrix lz = p2.left_action(z);
        Matrix on2 = hom_operator(n12.right, n12.right, [&](const Matrix& y) { return y * rz; }, "n associativity");
        rops.push_back(n12.quot.descend(n12.quot.proj * kron(Matrix::identity(d1), on2), "n associativity"));
        lops.push_back(hom_operator(n23.right, n23.right, [&](const Matrix& w) { return lz * w; }, "n associativity"));
    }
    Quotient q_left = tensor_quotient(n12.quot.dim, d3, rops, lops);
    rops.clear();
    lops.clear();
    for (const auto& z : center_generators(m.right())) {
        Matrix rz = m.right_action(z);
        Matrix lz = n2.left_action(z);
        rops.push_back(hom_operator(n12.left, n12.left, [&](const Matrix& x) { return x * rz; }, "n associativity"));
        Matrix on2 = hom_operator(n23.left, n23.left, [&](const Matrix& y) { return lz * y; }, "n associativity");
        lops.push_back(n23.quot.descend(n23.quot.proj * kron(on2, Matrix::identity(d3)), "n associativity"));
    }
    Quotient q_right = tensor_quotient(d1, n23.quot.dim, rops, lops);

    Matrix lhs = n12_3.map * tensor_maps(n12.map, Matrix::identity(d3), q_left, n12_3.quot);
    Matrix a = assoc_iso(mn_p, m_np).map.mat;
    Matrix a2inv = assoc_iso(mn_p2, m_np2).inverse.mat;
    Matrix conj = hom_operator(n1_23.target, n12_3.target, [&](const Matrix& x) { return a2inv * x * a; },
                               "n associativity");
    Matrix rhs = conj * n1_23.map * tensor_maps(Matrix::identity(d1), n23.map, q_right, n1_23.quot) *
                 assoc_matrix(n12.quot, q_left, n23.quot, q_right, d1, d2, d3);
    return CoherenceReport::compare("n associativity", "", lhs, rhs);
}

MCell m_prime_and_m(const BimoduleMap& phi, const BimoduleMap& psi) {
    MCell out;
    TensorResult fg = tensor_over(phi.src, psi.src);
    TensorResult fg2 = tensor_over(phi.tgt, psi.tgt);
    out.mfg = mult_transform_bimodule(fg);
    out.mfg2 = mult_transform_bimodule(fg2);
    out.zphi = Z_2cell(phi);
    out.zpsi = Z_2cell(psi);
    out.zprod = Z_2cell(BimoduleMap{fg.product, fg2.product, tensor_maps(phi.mat, psi.mat, fg.quot, fg2.quot)});
    out.h = horizontal_compose(out.zphi.diagram, out.zpsi.diagram);
    out.upper = vertical_compose(out.mfg2.diagram, out.h.diagram);
    out.lower = vertical_compose(out.zprod.diagram, out.mfg.diagram);
    out.n = n_general(fg, fg2);
    if (out.n.quot.relations != out.h.quot.relations) throw Error("m_prime_and_m: quotient presentations disagree");

    const HomSpace& target = out.zprod.hom;
    const HomSpace& end2 = out.mfg2.zmn.end->space;
    const HomSpace& end1 = out.mfg.zmn.end->space;
    const std::size_t dq = out.n.quot.dim;
    // m'(x ⊗ w) = x ∘ n(w).
    Matrix amb(target.dim(), end2.dim() * dq);
    for (std::size_t i = 0; i < end2.dim(); ++i)
        for (std::size_t j = 0; j < dq; ++j) {
            Matrix w = target.element(out.n.map.col(j));
            amb.set_col(i * dq + j, coords_or_throw(target.coordinates(end2.basis[i] * w), "m'"));
        }
    out.m_prime = out.upper.tensor.quot.descend(amb, "m'");
    out.r = out.lower.tensor.quot.descend(compose_hom(target, end1, target), "r");
    auto rinv = inverse(out.r);
    if (!rinv) throw Error("m_prime_and_m: unit map is not invertible");
    out.m = *rinv * out.m_prime;
    return out;
}

std::vector<CoherenceReport> verify_lax_units(const AlgebraMap& f) {
    std::vector<CoherenceReport> out;
    ZMorphismResult zid = Z_hom(identity_map(f.src()));
    Cospan id = identity_cospan(zid.za.center.induced);
    out.push_back(flat_compare("unit is strict", "Z(id) = id",
                               {zid.cospan.legA.mat(), zid.cospan.legB.mat()}, {id.legA.mat(), id.legB.mat()}));
    if (!(zid.cospan.apex == id.apex)) out.back().pass = false;

    MultTransform right = mult_transform(f, identity_map(f.tgt()));
    const Algebra& zf = right.zf.cospan.apex;
    const Matrix& lb = right.zf.cospan.legB.mat();
    Matrix ramb(zf.dim(), zf.dim() * lb.cols());
    for (std::size_t i = 0; i < zf.dim(); ++i)
        for (std::size_t j = 0; j < lb.cols(); ++j)
            ramb.set_col(i * lb.cols() + j, zf.multiply(unit_vector(zf.dim(), i), lb.col(j)));
    out.push_back(CoherenceReport::compare("right unit", "m(f, id) = r", right.m.mat(),
                                           right.domain.quot.descend(ramb, "right unit")));

    MultTransform left = mult_transform(identity_map(f.src()), f);
    const Matrix& la = left.zg.cospan.legA.mat();
    Matrix lamb(zf.dim(), la.cols() * zf.dim());
    for (std::size_t i = 0; i < la.cols(); ++i)
        for (std::size_t j = 0; j < zf.dim(); ++j)
            lamb.set_col(i * zf.dim() + j, zf.multiply(la.col(i), unit_vector(zf.dim(), j)));
    out.push_back(CoherenceReport::compare("left unit", "m(id, f) = l", left.m.mat(),
                                           left.domain.quot.descend(lamb, "left unit")));
    return out;
}

std::vector<CoherenceReport> verify_lax_functor(const AlgebraMap& f, const AlgebraMap& g, const AlgebraMap& h) {
    MultTransform fg = mult_transform(f, g);
    MultTransform gf_h = mult_transform(compose_maps(g, f), h);
    MultTransform gh = mult_transform(g, h);
    MultTransform f_hg = mult_transform(f, compose_maps(h, g));
    CospanComposite fg_h = compose_cospans(gh.zg.cospan, fg.domain.result);
    CospanComposite f_gh = compose_cospans(gh.domain.result, fg.zf.cospan);
    const std::size_t df = fg.zf.cospan.apex.dim(), dg = fg.zg.cospan.apex.dim(), dh = gh.zg.cospan.apex.dim();
    Matrix lhs = gf_h.m.mat() * tensor_maps(fg.m.mat(), Matrix::identity(dh), fg_h.quot, gf_h.domain.quot);
    Matrix rhs = f_hg.m.mat() * tensor_maps(Matrix::identity(df), gh.m.mat(), f_gh.quot, f_hg.domain.quot) *
                 assoc_matrix(fg.domain.quot, fg_h.quot, gh.domain.quot, f_gh.quot, df, dg, dh);
    std::vector<CoherenceReport> out;
    out.push_back(CoherenceReport::compare("lax associativity", "m(gf,h)(m(f,g) 1) = m(f,hg)(1 m(g,h)) a", lhs, rhs));
    for (const auto& map : {f, g, h})
        for (auto& r : verify_lax_units(map)) out.push_back(std::move(r));
    return out;
}

std::vector<CoherenceReport> verify_m_naturality(const BimoduleMap& phi, const BimoduleMap& psi,
                                                 const BimoduleMap& phi2, const BimoduleMap& psi2) {
    std::vector<CoherenceReport> out;
    MCell mc1 = m_prime_and_m(phi, psi);

    // n ∘ ([F,phi] ⊗ [G,psi]) = [GF, psi phi] ∘ m_{F,G}
    Matrix post = tensor_maps(mc1.zphi.diagram.f, mc1.zpsi.diagram.f, mc1.mfg.domain.quot, mc1.n.quot);
    out.push_back(CoherenceReport::compare("n after post-composition", "", mc1.n.map * post,
                                           mc1.zprod.diagram.f * mc1.mfg.m.mat()));
    // n ∘ ([phi,F'] ⊗ [psi,G']) = [psi phi, G'F'] ∘ m_{F',G'}
    Matrix pre = tensor_maps(mc1.zphi.diagram.g, mc1.zpsi.diagram.g, mc1.mfg2.domain.quot, mc1.n.quot);
    out.push_back(CoherenceReport::compare("n after pre-composition", "", mc1.n.map * pre,
                                           mc1.zprod.diagram.g * mc1.mfg2.m.mat()));
    // m is a 3-cell between the two composites.
    ThreeCell cell{mc1.upper.diagram, mc1.lower.diagram, mc1.m};
    auto legs = flat_compare("m is a 3-cell", "", {mc1.m * mc1.upper.diagram.f, mc1.m * mc1.upper.diagram.g},
                             {mc1.lower.diagram.f, mc1.lower.diagram.g});
    if (!validate_3cell(cell).clean()) legs.pass = false;
    out.push_back(std::move(legs));

    // Composition: F -> F' -> F'' and G -> G' -> G''.
    MCell mc2 = m_prime_and_m(phi2, psi2);
    MCell mc3 = m_prime_and_m(compose(phi2, phi), compose(psi2, psi));
    const TwoDiagram& d2 = mc2.mfg2.diagram;  // m_{F'',G''}
    const TwoDiagram& d0 = mc1.mfg.diagram;   // m_{F,G}
    const TwoDiagram& h1 = mc1.h.diagram;
    const TwoDiagram& h2 = mc2.h.diagram;

    VerticalComposite va = mc2.upper;
    VerticalComposite vb = vertical_compose(va.diagram, h1);
    VerticalComposite vc = vertical_compose(h2, h1);
    VerticalComposite vd = vertical_compose(d2, vc.diagram);
    Beta bt = beta(mc2.zphi.diagram, mc2.zpsi.diagram, mc1.zphi.diagram, mc1.zpsi.diagram);
    VerticalComposite vd2 = vertical_compose(d2, bt.rhs.diagram);
    Matrix cf = composition_on(bt.left_v, mc2.zphi.hom, mc1.zphi.hom, mc3.zphi.hom);
    Matrix cg = composition_on(bt.right_v, mc2.zpsi.hom, mc1.zpsi.hom, mc3.zpsi.hom);
    Matrix chor = horizontal_3cells(cf, cg, bt.rhs, mc3.h);
    const std::size_t dz2 = d2.M.dim();
    Matrix route1 = mc3.m * vertical_3cells(Matrix::identity(dz2), chor, vd2, mc3.upper) *
                    vertical_3cells(Matrix::identity(dz2), bt.beta, vd, vd2) *
                    assoc_matrix(va.tensor.quot, vb.tensor.quot, vc.tensor.quot, vd.tensor.quot, dz2, h2.M.dim(),
                                 h1.M.dim());

    const TwoDiagram& x2 = mc2.zprod.diagram;
    const TwoDiagram& x1 = mc1.zprod.diagram;
    VerticalComposite vg = mc2.lower;
    VerticalComposite vh = vertical_compose(vg.diagram, h1);
    VerticalComposite vi = mc1.upper;
    VerticalComposite vj = vertical_compose(x2, vi.diagram);
    VerticalComposite vk = mc1.lower;
    VerticalComposite vl = vertical_compose(x2, vk.diagram);
    VerticalComposite vm = vertical_compose(x2, x1);
    VerticalComposite vn = vertical_compose(vm.diagram, d0);
    const std::size_t dx = x2.M.dim(), dz1 = mc1.mfg2.diagram.M.dim();
    Matrix step1 = vertical_3cells(mc2.m, Matrix::identity(h1.M.dim()), vb, vh);
    Matrix step2 = assoc_matrix(vg.tensor.quot, vh.tensor.quot, vi.tensor.quot, vj.tensor.quot, dx, dz1, h1.M.dim());
    Matrix step3 = vertical_3cells(Matrix::identity(dx), mc1.m, vj, vl);
    auto step4 = inverse(
        assoc_matrix(vm.tensor.quot, vn.tensor.quot, vk.tensor.quot, vl.tensor.quot, dx, x1.M.dim(), d0.M.dim()));
    if (!step4) throw Error("verify_m_naturality: associator is not invertible");
    Matrix cmp = composition_on(vm, mc2.zprod.hom, mc1.zprod.hom, mc3.zprod.hom);
    Matrix step5 = vertical_3cells(cmp, Matrix::identity(d0.M.dim()), vn, mc3.lower);
    Matrix route2 = step5 * *step4 * step3 * step2 * step1;
    out.push_back(CoherenceReport::compare("m composition", "phi2 phi, psi2 psi", route1, route2));
    return out;
}

CoherenceReport verify_m_unit(const Algebra& b) {
    Bimodule reg = regular_bimodule(b);
    BimoduleMap id = identity_bimodule_map(reg);
    MCell mc = m_prime_and_m(id, id);
    const Algebra& end = mc.mfg.zmn.cospan.apex;
    const std::size_t dq = mc.n.quot.dim;
    Matrix amb(end.dim(), end.dim() * dq);
    for (std::size_t i = 0; i < end.dim(); ++i)
        for (std::size_t j = 0; j < dq; ++j)
            amb.set_col(i * dq + j, end.multiply(unit_vector(end.dim(), i), mc.mfg.m.mat().col(j)));
    Matrix l = mc.upper.tensor.quot.descend(amb, "left unit");
    Matrix rinv = mc.lower.tensor.quot.proj *
                  kron(Matrix::identity(mc.zprod.hom.dim()), Matrix::column(end.unit()));
    return CoherenceReport::compare("m unit", "m = r^-1 l", mc.m, rinv * l);
}

MoritaReport morita_center_check(const Algebra& a, std::size_t n) {
    MoritaReport out;
    out.checks.subject = "morita";
    Algebra mn = matrix_algebra(a, n);
    out.za = Z_object(a);
    out.zm = Z_object(mn);
    const Matrix& incl = out.za.center.incl;
    const std::size_t b = a.dim();
    Matrix mat(out.zm.center.dim(), incl.cols());
    for (std::size_t i = 0; i < incl.cols(); ++i) {
        Vector v(mn.dim());
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < b; ++k) v[(d * n + d) * b + k] = incl(k, i);
        auto x = out.zm.center.coordinates(v);
        if (!x) {
            out.checks.add("image central", {i});
            continue;
        }
        mat.set_col(i, *x);
    }
    out.map = AlgebraMap(out.za.center.induced, out.zm.center.induced, mat);
    if (out.checks.clean()) out.checks.merge(validate_map(out.map));
    if (out.checks.clean() && !is_isomorphism(out.map)) out.checks.add("bijective", {});
    out.iso = out.checks.clean();
    return out;
}

bool Thm58Report::non_lax() const {
    for (const auto& i : items)
        if (!i.iso()) return false;
    return true;
}

std::string Thm58Report::verdict() const { return non_lax() ? "non-lax on this corpus" : "lax on this corpus"; }

Thm58Report check_theorem58_hypotheses(const std::vector<Bimodule>& lefts, const std::vector<Bimodule>& rights) {
    Thm58Report out;
    auto comp_items = [&](const std::vector<Bimodule>& side, const std::string& tag) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = 0; j < side.size(); ++j)
                for (std::size_t k = 0; k < side.size(); ++k) {
                    CompBar cb = comp_bar(hom_space(side[j], side[k]), hom_space(side[i], side[j]));
                    out.items.push_back({"comp_bar " + tag + " " + std::to_string(i) + std::to_string(j) +
                                             std::to_string(k),
                                         rank(cb.map), cb.domain.quot.dim, cb.target.dim()});
                }
    };
    comp_items(lefts, "left");
    comp_items(rights, "right");
    for (std::size_t a = 0; a < lefts.size(); ++a)
        for (std::size_t a2 = 0; a2 < lefts.size(); ++a2)
            for (std::size_t c = 0; c < rights.size(); ++c)
                for (std::size_t c2 = 0; c2 < rights.size(); ++c2) {
                    std::string tag = std::to_string(a) + std::to_string(a2) + std::to_string(c) + std::to_string(c2);
                    BimoduleMap phi{lefts[a], lefts[a2], Matrix(lefts[a2].dim(), lefts[a].dim())};
                    BimoduleMap psi{rights[c], rights[c2], Matrix(rights[c2].dim(), rights[c].dim())};
                    MCell mc = m_prime_and_m(phi, psi);
                    out.items.push_back({"n " + tag, rank(mc.n.map), mc.n.quot.dim, mc.n.target.dim()});
                    out.items.push_back({"m " + tag, rank(mc.m), mc.upper.tensor.quot.dim, mc.lower.tensor.quot.dim});
                }
    return out;
}

}  // namespace centrum
