#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include <centrum/corpus.hpp>
#include <centrum/errors.hpp>

#include "session.hpp"

using namespace centrum;
using centrum::cli::InputError;
using centrum::cli::Session;
using json = nlohmann::json;

namespace {

// What a command produces: the constructed object and the checks run on it.
struct Outcome {
    json object = json::object();
    json checks = json::array();
    bool pass = true;

    void add(const CoherenceReport& r) {
        checks.push_back(io::to_json(r, !r.pass));
        pass = pass && r.pass;
    }
    void add(const std::vector<CoherenceReport>& rs) {
        for (const auto& r : rs) add(r);
    }
    void add(const ValidationReport& r) {
        checks.push_back(io::to_json(r));
        pass = pass && r.clean();
    }
    void add(const std::string& law, bool ok, json detail = nullptr) {
        json c = {{"law", law}, {"pass", ok}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
        pass = pass && ok;
    }
};

struct Inputs {
    std::string algebra, map, bimodule, bimodule_map, left, right, first, second, upper, lower;
    std::string cospan, diagram, bimodules, cospans, maps, lefts, rights;
    std::string upper_left, upper_right, lower_left, lower_right;
    std::string phi, psi, phi2, psi2;
    std::size_t n = 2;
    std::size_t random = 0;
};

json subalgebra_json(const Subalgebra& s) {
    return {{"dim", s.dim()}, {"ambient_dim", s.parent.dim()}, {"basis", io::to_json(s.incl)}};
}

json zmorphism_json(const ZMorphismResult& z) {
    return {{"dim_Z_source", z.za.center.dim()},
            {"dim_Z_target", z.zb.center.dim()},
            {"apex_dim", z.cospan.apex.dim()},
            {"cospan", io::to_json(z.cospan)}};
}

std::vector<Bimodule> bimodule_list(Session& s, const std::string& slot, const std::string& text) {
    json arr = s.array(slot, text);
    std::vector<Bimodule> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(s.bimodule(slot + "[" + std::to_string(i) + "]", arr[i].dump()));
    return out;
}

void need(const std::string& value, const std::string& flag) {
    if (value.empty()) throw InputError("missing " + flag);
}

SearchOptions search_options(std::int64_t bound) {
    SearchOptions o;
    o.bound = bound;
    return o;
}

json search_json(const InvertibleSearch& s, const SearchOptions& o) {
    json j = {{"verdict", to_string(s.verdict)}, {"parameters", s.parameters}};
    if (s.cell) j["failure_bound_log2"] = failure_bound_log2(s.cell->delta.rows(), o);
    if (s.verdict == Verdict::ProbablyNone) j["failure_bound_log2"] = s.failure_log2;
    return j;
}

void invertible_2cell(Outcome& out, const std::optional<InvertibleTwoCell>& inv, const SearchOptions& o,
                      const std::string& label) {
    if (!inv) {
        out.object[label] = {{"invertible", false}, {"reason", "a leg is not invertible"}};
        out.add(label + " invertible", false);
        return;
    }
    out.object[label] = {{"invertible", inv->certified()},
                         {"inverse", io::to_json(inv->inverse)},
                         {"left", search_json(inv->left, o)},
                         {"right", search_json(inv->right, o)}};
    out.add(label + " certified", inv->certified());
}

int emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full centre constructions for finite-dimensional algebras"};
    app.require_subcommand(1);
    std::string field = "rational";
    std::uint64_t seed = 1;
    std::int64_t bound = 0;
    std::string out_path;
    app.add_option("--field", field, "rational or gfp:<p>");
    app.add_option("--seed", seed, "seed for every random choice");
    app.add_option("--bound", bound, "sampling range [-bound, bound] for probabilistic searches");
    app.add_option("--out", out_path, "write the report here instead of stdout");

    Inputs in;
    std::string command;
    std::function<Outcome(Session&)> run;

    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* c = parent->add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    auto on = [&](CLI::App* c, std::string full, std::function<Outcome(Session&)> body) {
        c->callback([&, full = std::move(full), body = std::move(body)] {
            command = full;
            run = body;
        });
    };

    // validate
    std::string kind = "algebra", input;
    CLI::App* validate = sub(&app, "validate", "load an object and run its validator");
    validate->add_option("--kind", kind, "algebra|map|bimodule|bimodule-map|cospan|2diagram")
        ->check(CLI::IsMember({"algebra", "map", "bimodule", "bimodule-map", "cospan", "2diagram"}));
    validate->add_option("--input", input, "JSON file or inline JSON")->required();
    on(validate, "validate", [&](Session& s) {
        Outcome out;
        if (kind == "algebra") out.object["dim"] = s.algebra("input", input).dim();
        if (kind == "map") s.map("input", input);
        if (kind == "bimodule") out.object["dim"] = s.bimodule("input", input).dim();
        if (kind == "bimodule-map") s.bimodule_map("input", input);
        if (kind == "cospan") out.object["apex_dim"] = s.cospan("input", input).apex.dim();
        if (kind == "2diagram") out.object["dim"] = s.diagram("input", input).M.dim();
        out.object["kind"] = kind;
        out.add(kind + " validator", true);
        return out;
    });

    CLI::App* c_center = sub(&app, "center", "center of an algebra");
    c_center->add_option("--algebra", in.algebra)->required();
    on(c_center, "center", [&](Session& s) {
        Outcome out;
        Algebra a = s.algebra("algebra", in.algebra);
        out.object = subalgebra_json(center(a));
        return out;
    });

    CLI::App* c_cent = sub(&app, "centralizer", "centralizer of the image of an algebra map");
    c_cent->add_option("--map", in.map)->required();
    on(c_cent, "centralizer", [&](Session& s) {
        Outcome out;
        out.object = subalgebra_json(centralizer(s.map("map", in.map)));
        return out;
    });

    CLI::App* c_zhom = sub(&app, "z-hom", "Z of an algebra map, with agreement against Z of its bimodule");
    c_zhom->add_option("--map", in.map)->required();
    on(c_zhom, "z-hom", [&](Session& s) {
        Outcome out;
        AlgebraMap f = s.map("map", in.map);
        ZMorphismResult z = Z_hom(f);
        out.object = zmorphism_json(z);
        out.add(validate_cospan(z.cospan));
        ZAgreement ag = Z_agreement(f);
        out.add("evaluation at the unit is an isomorphism", ag.is_iso);
        out.add("evaluation at the unit commutes with the legs", ag.legs_commute);
        return out;
    });

    CLI::App* c_zbim = sub(&app, "z-bimodule", "Z of a bimodule");
    c_zbim->add_option("--bimodule", in.bimodule)->required();
    on(c_zbim, "z-bimodule", [&](Session& s) {
        Outcome out;
        ZMorphismResult z = Z_bimodule(s.bimodule("bimodule", in.bimodule));
        out.object = zmorphism_json(z);
        out.add(validate_cospan(z.cospan));
        return out;
    });

    CLI::App* c_z2 = sub(&app, "z-2cell", "the 2-diagram Z(phi) of a bimodule map");
    c_z2->add_option("--bimodule-map", in.bimodule_map)->required();
    on(c_z2, "z-2cell", [&](Session& s) {
        Outcome out;
        Z2CellResult z = Z_2cell(s.bimodule_map("bimodule-map", in.bimodule_map));
        out.object = {{"hom_dim", z.hom.dim()}, {"diagram", io::to_json(z.diagram)}};
        out.add(validate_2diagram(z.diagram));
        return out;
    });

    CLI::App* c_tensor = sub(&app, "tensor-over", "M ⊗_B N");
    c_tensor->add_option("--left", in.left)->required();
    c_tensor->add_option("--right", in.right)->required();
    on(c_tensor, "tensor-over", [&](Session& s) {
        Outcome out;
        TensorResult t = tensor_over(s.bimodule("left", in.left), s.bimodule("right", in.right));
        out.object = {{"dim", t.product.dim()}, {"product", io::to_json(t.product)}, {"quotient", io::to_json(t.quot)}};
        out.add("proj * sect = I", (t.quot.proj * t.quot.sect).is_identity());
        out.add("proj * relations = 0", (t.quot.proj * t.quot.relations).is_zero());
        out.add(validate_bimodule(t.product));
        return out;
    });

    CLI::App* c_cc = sub(&app, "compose-cospans", "second ⊚ first");
    c_cc->add_option("--first", in.first)->required();
    c_cc->add_option("--second", in.second)->required();
    on(c_cc, "compose-cospans", [&](Session& s) {
        Outcome out;
        CospanComposite c = compose_cospans(s.cospan("second", in.second), s.cospan("first", in.first));
        out.object = {{"apex_dim", c.result.apex.dim()}, {"cospan", io::to_json(c.result)}};
        out.add(validate_cospan(c.result));
        return out;
    });

    CLI::App* c_c2 = sub(&app, "compose-2diagrams", "vertical or horizontal composite of 2-diagrams");
    c_c2->require_subcommand(1);
    CLI::App* c_vert = sub(c_c2, "vertical", "upper ⊚ lower");
    c_vert->add_option("--upper", in.upper)->required();
    c_vert->add_option("--lower", in.lower)->required();
    on(c_vert, "compose-2diagrams vertical", [&](Session& s) {
        Outcome out;
        VerticalComposite v = vertical_compose(s.diagram("upper", in.upper), s.diagram("lower", in.lower));
        out.object = {{"dim", v.diagram.M.dim()}, {"diagram", io::to_json(v.diagram)}};
        out.add(validate_2diagram(v.diagram));
        return out;
    });
    CLI::App* c_horiz = sub(c_c2, "horizontal", "left ⊗ right over the middle algebra");
    c_horiz->add_option("--left", in.left)->required();
    c_horiz->add_option("--right", in.right)->required();
    on(c_horiz, "compose-2diagrams horizontal", [&](Session& s) {
        Outcome out;
        HorizontalComposite h = horizontal_compose(s.diagram("left", in.left), s.diagram("right", in.right));
        out.object = {{"dim", h.diagram.M.dim()}, {"diagram", io::to_json(h.diagram)}};
        out.add(validate_2diagram(h.diagram));
        return out;
    });

    CLI::App* c_beta = sub(&app, "beta-check", "interchange 3-cell and its inverse");
    c_beta->add_option("--upper-left", in.upper_left, "Mu");
    c_beta->add_option("--upper-right", in.upper_right, "Nu");
    c_beta->add_option("--lower-left", in.lower_left, "M");
    c_beta->add_option("--lower-right", in.lower_right, "N");
    c_beta->add_option("--random", in.random, "check this many sampled instances instead");
    on(c_beta, "beta-check", [&](Session& s) {
        Outcome out;
        auto one = [&](const TwoDiagram& mu, const TwoDiagram& nu, const TwoDiagram& m, const TwoDiagram& n,
                       bool record) {
            Beta b = beta(mu, nu, m, n);
            if (record) out.object = {{"beta", io::to_json(b.beta)}, {"beta_inverse", io::to_json(b.beta_inverse)}};
            out.add(check_beta(b));
            out.add(validate_3cell(beta_cell(b)));
        };
        if (in.random > 0) {
            for (std::size_t i = 0; i < in.random; ++i) {
                auto inst = fixtures::random_beta_instance(s.rng());
                one(inst.Mu, inst.Nu, inst.M, inst.N, false);
            }
            out.object = {{"instances", in.random}};
            return out;
        }
        need(in.upper_left, "--upper-left");
        need(in.upper_right, "--upper-right");
        need(in.lower_left, "--lower-left");
        need(in.lower_right, "--lower-right");
        one(s.diagram("upper-left", in.upper_left), s.diagram("upper-right", in.upper_right),
            s.diagram("lower-left", in.lower_left), s.diagram("lower-right", in.lower_right), true);
        return out;
    });

    CLI::App* c_inv = sub(&app, "invertible", "decide invertibility of a cospan or a 2-diagram");
    c_inv->require_subcommand(1);
    CLI::App* c_inv_c = sub(c_inv, "cospan", "invertible 1-morphism");
    c_inv_c->add_option("--cospan", in.cospan)->required();
    on(c_inv_c, "invertible cospan", [&](Session& s) {
        Outcome out;
        SearchOptions o = search_options(bound);
        auto inv = is_invertible_cospan(s.cospan("cospan", in.cospan), s.rng(), o);
        out.object["invertible"] = inv.has_value() && inv->certified();
        if (inv) {
            out.object["inverse"] = io::to_json(inv->inverse);
            invertible_2cell(out, inv->left, o, "witness_left");
            invertible_2cell(out, inv->right, o, "witness_right");
        } else {
            out.object["reason"] = "a leg is not an isomorphism";
            out.add("cospan invertible", false);
        }
        return out;
    });
    CLI::App* c_inv_d = sub(c_inv, "2cell", "invertible 2-diagram");
    c_inv_d->add_option("--diagram", in.diagram)->required();
    on(c_inv_d, "invertible 2cell", [&](Session& s) {
        Outcome out;
        SearchOptions o = search_options(bound);
        invertible_2cell(out, invert_2diagram(s.diagram("diagram", in.diagram), s.rng(), o), o, "diagram");
        out.object["invertible"] = out.object["diagram"]["invertible"];
        return out;
    });

    CLI::App* c_verify = sub(&app, "verify", "coherence laws");
    c_verify->require_subcommand(1);
    CLI::App* v_pent = sub(c_verify, "pentagon", "associator pentagon");
    v_pent->add_option("--bimodules", in.bimodules, "array of four composable bimodules");
    v_pent->add_option("--cospans", in.cospans, "array of four composable cospans");
    on(v_pent, "verify pentagon", [&](Session& s) {
        Outcome out;
        if (!in.bimodules.empty()) {
            auto ms = bimodule_list(s, "bimodules", in.bimodules);
            if (ms.size() != 4) throw InputError("pentagon takes four bimodules");
            out.add(check_pentagon(ms[0], ms[1], ms[2], ms[3]));
        } else {
            need(in.cospans, "--bimodules or --cospans");
            json arr = s.array("cospans", in.cospans);
            if (arr.size() != 4) throw InputError("pentagon takes four cospans");
            std::vector<Cospan> cs;
            for (std::size_t i = 0; i < 4; ++i) cs.push_back(s.cospan("cospans[" + std::to_string(i) + "]", arr[i].dump()));
            out.add(check_pentagon(cs[0], cs[1], cs[2], cs[3]));
        }
        return out;
    });
    CLI::App* v_tri = sub(c_verify, "triangle", "unit triangle");
    v_tri->add_option("--bimodules", in.bimodules, "array of two composable bimodules");
    v_tri->add_option("--cospans", in.cospans, "array of two composable cospans");
    on(v_tri, "verify triangle", [&](Session& s) {
        Outcome out;
        if (!in.bimodules.empty()) {
            auto ms = bimodule_list(s, "bimodules", in.bimodules);
            if (ms.size() != 2) throw InputError("triangle takes two bimodules");
            out.add(check_triangle(ms[0], ms[1]));
        } else {
            need(in.cospans, "--bimodules or --cospans");
            json arr = s.array("cospans", in.cospans);
            if (arr.size() != 2) throw InputError("triangle takes two cospans");
            out.add(check_triangle(s.cospan("cospans[0]", arr[0].dump()), s.cospan("cospans[1]", arr[1].dump())));
        }
        return out;
    });
    CLI::App* v_lax = sub(c_verify, "lax", "lax functor axioms of Z on algebra maps");
    v_lax->add_option("--maps", in.maps, "array [f, g, h] of composable algebra maps");
    v_lax->add_option("--random", in.random, "check this many sampled chains instead");
    on(v_lax, "verify lax", [&](Session& s) {
        Outcome out;
        auto chain = [&](const AlgebraMap& f, const AlgebraMap& g, const AlgebraMap& h) {
            out.add(verify_lax_functor(f, g, h));
            MultTransform mt = mult_transform(f, g);
            out.add(validate_map(mt.m));
            return mt;
        };
        if (in.random > 0) {
            for (std::size_t i = 0; i < in.random; ++i) {
                auto c = fixtures::random_chain(3, s.rng());
                chain(c[0], c[1], c[2]);
            }
            out.object = {{"chains", in.random}};
            return out;
        }
        need(in.maps, "--maps or --random");
        json arr = s.array("maps", in.maps);
        if (arr.size() != 3) throw InputError("lax takes three maps");
        std::vector<AlgebraMap> fs;
        for (std::size_t i = 0; i < 3; ++i) fs.push_back(s.map("maps[" + std::to_string(i) + "]", arr[i].dump()));
        MultTransform mt = chain(fs[0], fs[1], fs[2]);
        out.object = {{"rank_m", rank(mt.m.mat())},
                      {"domain_dim", mt.domain.result.apex.dim()},
                      {"target_dim", mt.zgf.cospan.apex.dim()}};
        return out;
    });
    CLI::App* v_nat = sub(c_verify, "naturality", "naturality and unit of m on bimodule maps");
    v_nat->add_option("--phi", in.phi, "F -> F'");
    v_nat->add_option("--psi", in.psi, "G -> G'");
    v_nat->add_option("--phi2", in.phi2, "F' -> F''; identity if omitted");
    v_nat->add_option("--psi2", in.psi2, "G' -> G''; identity if omitted");
    v_nat->add_option("--random", in.random, "check this many sampled semisimple instances instead");
    on(v_nat, "verify naturality", [&](Session& s) {
        Outcome out;
        if (in.random > 0) {
            for (std::size_t i = 0; i < in.random; ++i) {
                auto sc = fixtures::semisimple_case(3, s.rng());
                auto hom = [&](const Bimodule& a, const Bimodule& b) {
                    return BimoduleMap{a, b, fixtures::random_hom(hom_space(a, b), 2, s.rng())};
                };
                out.add(verify_m_naturality(hom(sc.lefts[0], sc.lefts[1]), hom(sc.rights[0], sc.rights[1]),
                                            hom(sc.lefts[1], sc.lefts[2]), hom(sc.rights[1], sc.rights[2])));
            }
            out.object = {{"instances", in.random}};
            return out;
        }
        need(in.phi, "--phi");
        need(in.psi, "--psi");
        BimoduleMap phi = s.bimodule_map("phi", in.phi);
        BimoduleMap psi = s.bimodule_map("psi", in.psi);
        BimoduleMap phi2 = in.phi2.empty() ? identity_bimodule_map(phi.tgt) : s.bimodule_map("phi2", in.phi2);
        BimoduleMap psi2 = in.psi2.empty() ? identity_bimodule_map(psi.tgt) : s.bimodule_map("psi2", in.psi2);
        out.add(verify_m_naturality(phi, psi, phi2, psi2));
        out.add(verify_m_unit(phi.src.right()));
        return out;
    });
    CLI::App* v_mor = sub(c_verify, "morita", "Z(A) -> Z(M_n(A))");
    v_mor->add_option("--algebra", in.algebra)->required();
    v_mor->add_option("--n", in.n)->check(CLI::Range(1, 6));
    on(v_mor, "verify morita", [&](Session& s) {
        Outcome out;
        MoritaReport m = morita_center_check(s.algebra("algebra", in.algebra), in.n);
        out.object = {{"dim_Z_A", m.za.center.dim()}, {"dim_Z_MnA", m.zm.center.dim()}, {"map", io::to_json(m.map.mat())}};
        out.add(m.checks);
        out.add("isomorphism", m.iso);
        return out;
    });
    CLI::App* v_t58 = sub(c_verify, "thm58", "isomorphism conditions for Z to be a strict functor");
    v_t58->add_option("--lefts", in.lefts, "array of bimodules over (A, B)");
    v_t58->add_option("--rights", in.rights, "array of bimodules over (B, C)");
    v_t58->add_option("--random", in.random, "check this many sampled semisimple cases instead");
    on(v_t58, "verify thm58", [&](Session& s) {
        Outcome out;
        auto report = [&](const Thm58Report& r) {
            json items = json::array();
            for (const auto& it : r.items)
                items.push_back({{"what", it.what}, {"rank", it.rank}, {"src_dim", it.src_dim},
                                 {"tgt_dim", it.tgt_dim}, {"iso", it.iso()}});
            return json{{"verdict", r.verdict()}, {"items", items}};
        };
        if (in.random > 0) {
            json cases = json::array();
            for (std::size_t i = 0; i < in.random; ++i) {
                auto sc = fixtures::semisimple_case(2, s.rng());
                Thm58Report r = check_theorem58_hypotheses(sc.lefts, sc.rights);
                cases.push_back({{"verdict", r.verdict()}, {"items", r.items.size()}});
                for (const auto& it : r.items) out.add(it.what, it.iso());
            }
            out.object = {{"cases", cases}};
            return out;
        }
        need(in.lefts, "--lefts or --random");
        need(in.rights, "--rights or --random");
        Thm58Report r = check_theorem58_hypotheses(bimodule_list(s, "lefts", in.lefts), bimodule_list(s, "rights", in.rights));
        out.object = report(r);
        return out;
    });

    corpus::Options copts;
    CLI::App* c_corpus = sub(&app, "corpus", "run the fixed acceptance corpus");
    on(c_corpus, "corpus", [&](Session&) {
        Outcome out;
        if (app.count("--seed") > 0) copts.seed = seed;
        json results = json::array();
        for (const auto& r : corpus::run_all(copts)) {
            json facts = json::object();
            for (const auto& [k, v] : r.facts) facts[k] = v;
            results.push_back({{"name", r.name}, {"pass", r.pass}, {"instances", r.instances},
                               {"failures", r.failures}, {"facts", facts}});
            out.add(r.name, r.pass);
        }
        out.object = {{"corpus_seed", copts.seed}, {"suites", results}};
        return out;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::uint32_t prime = 0;
    try {
        prime = io::parse_field(field);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    Session session(prime, seed);
    json report;
    int code = 0;
    try {
        Outcome out = run(session);
        report = session.envelope(command);
        report["object"] = std::move(out.object);
        report["checks"] = std::move(out.checks);
        report["pass"] = out.pass;
        code = out.pass ? 0 : 1;
    } catch (const InputError& e) {
        report = session.envelope(command);
        report["error"] = e.what();
        if (!e.report().is_null()) report["report"] = e.report();
        report["pass"] = false;
        code = 2;
    } catch (const centrum::Error& e) {
        report = session.envelope(command);
        report["error"] = e.what();
        report["pass"] = false;
        code = 2;
    }
    int written = emit(report, out_path);
    return written != 0 ? written : code;
}
