#include "centrum/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "centrum/errors.hpp"

namespace centrum::corpus {

namespace {

constexpr std::size_t kMaxFailures = 8;

template <class T>
const T& pick(const std::vector<T>& xs, Rng& rng) {
    return xs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(xs.size()) - 1))];
}

Rng suite_rng(const Options& opts, std::uint64_t salt) { return Rng(opts.seed * 1000003ULL + salt); }

// Runs one instance; an exception counts as a failure of that instance.
void guarded(Result& r, const std::string& instance, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.check(false, instance + ": " + e.what());
    }
}

bool two_sided(const Matrix& fwd, const Matrix& back) {
    return fwd.cols() == back.rows() && fwd.rows() == back.cols() && (fwd * back).is_identity() &&
           (back * fwd).is_identity();
}

// Dimension of the center by evaluating [x, e_j] on all basis pairs.
std::size_t commutator_kernel_dim(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix k(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector d = add(a.basis_product(i, j), scale(Scalar(-1), a.basis_product(j, i)));
            for (std::size_t c = 0; c < n; ++c) k(j * n + c, i) = d[c];
        }
    return n - rank(k);
}

bool commutes_with_all(const Algebra& a, const Matrix& elements, const Matrix& with) {
    for (std::size_t i = 0; i < elements.cols(); ++i)
        for (std::size_t j = 0; j < with.cols(); ++j)
            if (a.multiply(elements.col(i), with.col(j)) != a.multiply(with.col(j), elements.col(i))) return false;
    return true;
}

// A random bimodule with at most max(budget, smallest piece) dimensions.
Bimodule bimodule_within(const fixtures::Sample& a, const fixtures::Sample& b, std::size_t budget, Rng& rng) {
    auto smallest = [](const fixtures::Sample& s) {
        std::size_t d = s.reps.front()[0].rows();
        for (const auto& rep : s.reps) d = std::min(d, rep[0].rows());
        return d;
    };
    return fixtures::random_bimodule(a, b, std::max(budget, smallest(a) * smallest(b)), rng);
}

std::string fmt_log2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

}  // namespace

void Result::check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < kMaxFailures) failures.push_back(what);
}

Result center_suite(const Options& opts) {
    Result r;
    r.name = "center";
    for (std::size_t n : {2, 3}) {
        guarded(r, "matrix:" + std::to_string(n), [&] {
            Algebra a = full_matrix_algebra(n);
            Subalgebra z = center(a);
            r.check(z.dim() == 1, "center of M_" + std::to_string(n) + " has dim " + std::to_string(z.dim()));
            r.check(commutator_kernel_dim(a) == z.dim(), "brute-force center dimension differs for M_" + std::to_string(n));
            r.check(commutes_with_all(a, z.incl, Matrix::identity(a.dim())), "center element fails a commutator");
            r.fact("dim Z(M_" + std::to_string(n) + ")", std::to_string(z.dim()));
        });
        ++r.instances;
    }
    guarded(r, "diagonal inclusion", [&] {
        AlgebraMap f = fixtures::diagonal_inclusion(2);
        Subalgebra c = centralizer(f);
        r.check(c.dim() == 2, "centralizer of the diagonal inclusion has dim " + std::to_string(c.dim()));
        r.check(c.subspace() == Subspace::span(f.mat()), "centralizer differs from the diagonal subalgebra");
        r.check(commutes_with_all(f.tgt(), c.incl, f.mat()), "centralizer element fails a commutator");
        // Brute force: x with [x, f(e_i)] = 0 for every basis element e_i.
        const Algebra& t = f.tgt();
        Matrix k(t.dim() * f.src().dim(), t.dim());
        for (std::size_t x = 0; x < t.dim(); ++x)
            for (std::size_t i = 0; i < f.src().dim(); ++i) {
                Vector e = unit_vector(t.dim(), x);
                Vector d = add(t.multiply(e, f.mat().col(i)), scale(Scalar(-1), t.multiply(f.mat().col(i), e)));
                for (std::size_t c2 = 0; c2 < t.dim(); ++c2) k(i * t.dim() + c2, x) = d[c2];
            }
        r.check(t.dim() - rank(k) == c.dim(), "brute-force centralizer dimension differs");
        r.fact("dim centralizer(k^2 -> M_2)", std::to_string(c.dim()));
    });
    ++r.instances;
    Rng rng = suite_rng(opts, 1);
    for (const auto& s : fixtures::small_algebras()) {
        guarded(r, s.alg.label(), [&] {
            Matrix p = fixtures::random_invertible(s.alg.dim(), 1, rng);
            Algebra a = fixtures::transport_algebra(s.alg, p).alg;
            Subalgebra z = center(a);
            r.check(z.dim() == commutator_kernel_dim(a), "center dimension of " + s.alg.label() + " disagrees with brute force");
            r.check(commutes_with_all(a, z.incl, Matrix::identity(a.dim())), "center of " + s.alg.label() + " is not central");
        });
        ++r.instances;
    }
    return r;
}

Result coequalizer_suite(const Options& opts) {
    Result r;
    r.name = "coequalizer";
    Rng rng = suite_rng(opts, 2);
    const auto samples = fixtures::small_algebras();
    for (std::size_t i = 0; i < opts.coequalizer_pairs; ++i) {
        const std::string tag = "pair " + std::to_string(i);
        guarded(r, tag, [&] {
            const auto& sa = pick(samples, rng);
            const auto& sb = pick(samples, rng);
            const auto& sc = pick(samples, rng);
            Bimodule m = bimodule_within(sa, sb, 6, rng);
            Bimodule n = bimodule_within(sb, sc, 6, rng);
            TensorResult t = tensor_over(m, n);
            const Quotient& q = t.quot;
            r.check((q.proj * q.sect).is_identity(), tag + ": proj * sect != I");
            r.check((q.proj * q.relations).is_zero(), tag + ": proj * relations != 0");
            r.check(q.dim == q.ambient - rank(q.relations), tag + ": dim != ambient - rank");
            r.check(q.dim == t.product.dim(), tag + ": product dimension mismatch");
            const Matrix im = Matrix::identity(m.dim()), in = Matrix::identity(n.dim());
            for (std::size_t b = 0; b < sb.alg.dim(); ++b)
                r.check((q.proj * (kron(m.ract()[b], in) - kron(im, n.lact()[b]))).is_zero(),
                        tag + ": balancing relation survives");
            for (std::size_t a = 0; a < sa.alg.dim(); ++a)
                r.check(t.product.lact()[a] * q.proj == q.proj * kron(m.lact()[a], in), tag + ": left action does not descend");
            for (std::size_t c = 0; c < sc.alg.dim(); ++c)
                r.check(t.product.ract()[c] * q.proj == q.proj * kron(im, n.ract()[c]), tag + ": right action does not descend");

            BimoduleIso lu = unit_iso_left(tensor_over(regular_bimodule(sa.alg), m));
            BimoduleIso ru = unit_iso_right(tensor_over(m, regular_bimodule(sb.alg)));
            r.check(two_sided(lu.map.mat, lu.inverse.mat), tag + ": left unit inverse");
            r.check(two_sided(ru.map.mat, ru.inverse.mat), tag + ": right unit inverse");
            r.check(validate_bimodule_map(lu.map).clean() && validate_bimodule_map(ru.map).clean(),
                    tag + ": unit map is not a bimodule map");
            if (m.dim() * n.dim() <= 16) {
                Bimodule p = bimodule_within(sc, pick(samples, rng), 3, rng);
                BimoduleIso as = assoc_iso(tensor_over(t, p), tensor_over(m, tensor_over(n, p)));
                r.check(two_sided(as.map.mat, as.inverse.mat), tag + ": associator inverse");
                r.check(validate_bimodule_map(as.map).clean(), tag + ": associator is not a bimodule map");
            }
        });
        ++r.instances;
    }
    for (std::size_t i = 0; i < opts.coherence_instances; ++i) {
        const std::string tag = "coherence " + std::to_string(i);
        guarded(r, tag, [&] {
            std::vector<const fixtures::Sample*> s;
            for (int k = 0; k < 5; ++k) s.push_back(&pick(samples, rng));
            Bimodule m = bimodule_within(*s[0], *s[1], 3, rng);
            Bimodule n = bimodule_within(*s[1], *s[2], 3, rng);
            Bimodule p = bimodule_within(*s[2], *s[3], 3, rng);
            Bimodule q = bimodule_within(*s[3], *s[4], 3, rng);
            r.check(check_pentagon(m, n, p, q).pass, tag + ": pentagon");
            r.check(check_triangle(m, n).pass, tag + ": triangle");
        });
        ++r.instances;
    }
    return r;
}

Result beta_suite(const Options& opts) {
    Result r;
    r.name = "beta";
    Rng rng = suite_rng(opts, 3);
    for (std::size_t i = 0; i < opts.beta_instances; ++i) {
        const std::string tag = "instance " + std::to_string(i);
        guarded(r, tag, [&] {
            auto inst = fixtures::random_beta_instance(rng);
            Beta b = beta(inst.Mu, inst.Nu, inst.M, inst.N);
            r.check((b.beta * b.beta_inverse).is_identity(), tag + ": beta * beta3 != id");
            r.check((b.beta_inverse * b.beta).is_identity(), tag + ": beta3 * beta != id");
            for (const auto& rep : check_beta(b)) r.check(rep.pass, tag + ": " + rep.law);
            r.check(validate_3cell(beta_cell(b)).clean(), tag + ": beta is not a 3-cell");
            ThreeCell phi = fixtures::random_3cell(inst.M, rng);
            ThreeCell psi = fixtures::random_3cell(inst.N, rng);
            ThreeCell phiU = fixtures::random_3cell(inst.Mu, rng);
            ThreeCell psiU = fixtures::random_3cell(inst.Nu, rng);
            r.check(check_nattrans_axioms(phiU, psiU, phi, psi).pass, tag + ": naturality");
        });
        ++r.instances;
    }
    return r;
}

Result lax_functor_suite(const Options& opts) {
    Result r;
    r.name = "lax functor";
    Rng rng = suite_rng(opts, 4);
    for (std::size_t i = 0; i < opts.chains; ++i) {
        const std::string tag = "chain " + std::to_string(i);
        guarded(r, tag, [&] {
            auto chain = fixtures::random_chain(3, rng);
            for (const auto& rep : verify_lax_functor(chain[0], chain[1], chain[2]))
                r.check(rep.pass, tag + ": " + rep.law);
            MultTransform fg = mult_transform(chain[0], chain[1]);
            MultTransform gh = mult_transform(chain[1], chain[2]);
            r.check(validate_map(fg.m).clean() && validate_map(gh.m).clean(), tag + ": m is not an algebra map");
        });
        ++r.instances;
    }
    guarded(r, "witness", [&] {
        MultTransform w = mult_transform(fixtures::lax_witness_f(), fixtures::lax_witness_g());
        const std::size_t rk = rank(w.m.mat());
        const std::size_t target = w.zgf.cospan.apex.dim();
        r.check(rk == 2 && target == 4, "witness rank " + std::to_string(rk) + " into dim " + std::to_string(target));
        r.fact("witness rank m", std::to_string(rk));
        r.fact("witness dim Z(g f)", std::to_string(target));
    });
    ++r.instances;
    return r;
}

Result morita_suite(const Options&) {
    Result r;
    r.name = "morita";
    for (const char* name : {"k", "product:k^2", "dual_numbers", "group:C2", "matrix:2"})
        for (std::size_t n : {2, 3}) {
            const std::string tag = std::string(name) + " n=" + std::to_string(n);
            guarded(r, tag, [&] {
                MoritaReport m = morita_center_check(named_algebra(name), n);
                r.check(m.iso && m.checks.clean(), tag + ": not an isomorphism");
            });
            ++r.instances;
        }
    return r;
}

Result invertibility_suite(const Options& opts) {
    Result r;
    r.name = "invertibility";
    Rng rng = suite_rng(opts, 6);
    const SearchOptions search;
    double worst = -1e9;
    auto record = [&](const InvertibleSearch& s, const std::string& tag) {
        r.check(s.verdict == Verdict::Found, tag + ": " + to_string(s.verdict));
        if (s.cell) worst = std::max(worst, failure_bound_log2(s.cell->delta.rows(), search));
    };
    const auto comm = fixtures::small_commutative_algebras();
    for (std::size_t i = 0; i < opts.invertible_instances; ++i) {
        const std::string tag = "cospan " + std::to_string(i);
        guarded(r, tag, [&] {
            const Algebra& a = pick(comm, rng).alg;
            auto t1 = fixtures::transport_algebra(a, fixtures::random_invertible(a.dim(), 1, rng));
            auto t2 = fixtures::transport_algebra(a, fixtures::random_invertible(a.dim(), 1, rng));
            Cospan c = make_cospan(AlgebraMap(a, t1.alg, t1.from_old), AlgebraMap(t2.alg, t1.alg, t1.from_old * t2.to_old));
            auto inv = is_invertible_cospan(c, rng, search);
            r.check(inv.has_value(), tag + ": legs are isomorphisms but no inverse was built");
            if (!inv) return;
            for (const auto* two : {&inv->left, &inv->right}) {
                record(two->left, tag);
                record(two->right, tag);
            }
        });
        ++r.instances;
    }
    for (std::size_t i = 0; i < opts.invertible_instances; ++i) {
        const std::string tag = "2-diagram " + std::to_string(i);
        guarded(r, tag, [&] {
            const Algebra& a = pick(comm, rng).alg;
            const Algebra& b = pick(comm, rng).alg;
            Cospan c0 = fixtures::random_cospan(a, b, 8, rng);
            auto t = fixtures::transport_algebra(c0.apex, fixtures::random_invertible(c0.apex.dim(), 1, rng));
            Cospan c1{a, b, t.alg, AlgebraMap(a, t.alg, t.from_old * c0.legA.mat()),
                      AlgebraMap(b, t.alg, t.from_old * c0.legB.mat())};
            TwoDiagram d = morphism_2diagram(c0, c1, AlgebraMap(c0.apex, t.alg, t.from_old));
            Matrix q = fixtures::random_invertible(d.M.dim(), 1, rng);
            Matrix qinv = *inverse(q);
            TwoDiagram d2{d.src, d.tgt, change_basis(d.M, q), qinv * d.f, qinv * d.g};
            auto inv = invert_2diagram(d2, rng, search);
            r.check(inv.has_value(), tag + ": legs are invertible but no inverse was built");
            if (!inv) return;
            record(inv->left, tag);
            record(inv->right, tag);
        });
        ++r.instances;
    }
    for (std::size_t n : {2, 3}) {
        const std::string tag = "Z(k^" + std::to_string(n) + " -> M_" + std::to_string(n) + ")";
        guarded(r, tag, [&] {
            Cospan z = Z_hom(fixtures::diagonal_inclusion(n)).cospan;
            r.check(!is_invertible_cospan(z, rng, search).has_value(), tag + ": reported invertible");
        });
        ++r.instances;
    }
    r.check(worst < -20.0, "failure bound 2^" + fmt_log2(worst) + " is not below 2^-20");
    r.fact("worst failure bound log2", fmt_log2(worst));
    return r;
}

Result semisimple_suite(const Options& opts) {
    Result r;
    r.name = "semisimple";
    Rng rng = suite_rng(opts, 7);
    for (std::size_t i = 0; i < opts.semisimple_cases; ++i) {
        const std::string tag = "case " + std::to_string(i);
        guarded(r, tag, [&] {
            auto sc = fixtures::semisimple_case(2, rng);
            Thm58Report rep = check_theorem58_hypotheses(sc.lefts, sc.rights);
            for (const auto& item : rep.items)
                r.check(item.iso(), tag + ": " + item.what + " has rank " + std::to_string(item.rank));
            r.check(rep.verdict() == "non-lax on this corpus", tag + ": " + rep.verdict());
            r.fact(tag + " items", std::to_string(rep.items.size()));
        });
        ++r.instances;
    }
    return r;
}

Result interchange_suite(const Options& opts) {
    Result r;
    r.name = "interchange";
    Rng rng = suite_rng(opts, 8);
    const auto samples = fixtures::small_algebras();
    for (std::size_t i = 0; i < opts.interchange_instances; ++i) {
        const std::string tag = "instance " + std::to_string(i);
        guarded(r, tag, [&] {
            const auto& sa = pick(samples, rng);
            const auto& sb = pick(samples, rng);
            const auto& sc = pick(samples, rng);
            // Half the time the target is a copy on another basis, so hom spaces are nonzero.
            auto partner = [&](const Bimodule& m, const fixtures::Sample& l, const fixtures::Sample& rt) {
                if (uniform_int(rng, 0, 1) == 0) return change_basis(m, fixtures::random_invertible(m.dim(), 1, rng));
                return bimodule_within(l, rt, 4, rng);
            };
            Bimodule m = bimodule_within(sa, sb, 4, rng);
            Bimodule m2 = partner(m, sa, sb);
            Bimodule n = bimodule_within(sb, sc, 4, rng);
            Bimodule n2 = partner(n, sb, sc);
            BimoduleMap xi{m, m2, fixtures::random_hom(hom_space(m, m2), 2, rng)};
            BimoduleMap zeta{n, n2, fixtures::random_hom(hom_space(n, n2), 2, rng)};
            r.check(interchange_check(xi, zeta), tag + ": interchange");
        });
        ++r.instances;
    }
    return r;
}

std::vector<Result> run_all(const Options& opts) {
    return {center_suite(opts),        coequalizer_suite(opts),   beta_suite(opts),
            lax_functor_suite(opts),   morita_suite(opts),        invertibility_suite(opts),
            semisimple_suite(opts),    interchange_suite(opts)};
}

}  // namespace centrum::corpus
