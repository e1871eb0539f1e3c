#include "centrum/io.hpp"

#include "centrum/errors.hpp"
#include "centrum/fixtures.hpp"

namespace centrum::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t count_of(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<Matrix> matrices_from_json(const json& j, std::uint32_t prime) {
    if (!j.is_array()) throw ParseError("expected an array of matrices");
    std::vector<Matrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m, prime));
    return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

Scalar convert(const Scalar& s, std::uint32_t prime) {
    if (prime == 0 || s.modulus() == prime) return s;
    return Scalar::parse(s.str(), prime);
}

Vector convert(const Vector& v, std::uint32_t prime) {
    Vector out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(convert(s, prime));
    return out;
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

json to_json(const Algebra& a) {
    json sc = json::array();
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.sc(i, j, k).is_zero()) sc.push_back({i, j, k, a.sc(i, j, k).str()});
    json out = {{"dim", n}, {"unit", to_json(a.unit())}, {"structure_constants", sc}};
    if (!a.label().empty()) out["label"] = a.label();
    return out;
}

json to_json(const AlgebraMap& f) {
    return {{"src", to_json(f.src())}, {"tgt", to_json(f.tgt())}, {"matrix", to_json(f.mat())}};
}

json to_json(const Subalgebra& s) {
    return {{"dim", s.dim()}, {"inclusion", to_json(s.incl)}, {"algebra", to_json(s.induced)}};
}

json to_json(const Bimodule& m) {
    return {{"left", to_json(m.left())},
            {"right", to_json(m.right())},
            {"dim", m.dim()},
            {"lact", matrices_to_json(m.lact())},
            {"ract", matrices_to_json(m.ract())}};
}

json to_json(const BimoduleMap& f) {
    return {{"src", to_json(f.src)}, {"tgt", to_json(f.tgt)}, {"matrix", to_json(f.mat)}};
}

json to_json(const Quotient& q) {
    return {{"ambient", q.ambient}, {"dim", q.dim}, {"proj", to_json(q.proj)}, {"sect", to_json(q.sect)}};
}

json to_json(const Cospan& c) { return {{"legA", to_json(c.legA)}, {"legB", to_json(c.legB)}}; }

json to_json(const TwoDiagram& d) {
    return {{"src", to_json(d.src)}, {"tgt", to_json(d.tgt)}, {"M", to_json(d.M)},
            {"f", to_json(d.f)},     {"g", to_json(d.g)}};
}

json to_json(const ValidationReport& r) {
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e = {{"law", v.law}, {"indices", v.indices}};
        if (!v.detail.empty()) e["detail"] = v.detail;
        vs.push_back(e);
    }
    return {{"subject", r.subject}, {"pass", r.clean()}, {"violations", vs}};
}

json to_json(const CoherenceReport& r, bool with_matrices) {
    json out = {{"law", r.law}, {"instance", r.instance}, {"pass", r.pass}};
    if (with_matrices) {
        out["lhs"] = to_json(r.lhs);
        out["rhs"] = to_json(r.rhs);
    }
    return out;
}

Scalar scalar_from_json(const json& j, std::uint32_t prime) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), prime);
    if (j.is_number_integer()) return Scalar::parse(std::to_string(j.get<std::int64_t>()), prime);
    throw ParseError("scalar must be a string or an integer");
}

Vector vector_from_json(const json& j, std::uint32_t prime) {
    if (!j.is_array()) throw ParseError("vector must be an array");
    Vector v;
    for (const auto& e : j) v.push_back(scalar_from_json(e, prime));
    return v;
}

Matrix matrix_from_json(const json& j, std::uint32_t prime) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r, prime));
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ParseError("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
    }
    return m;
}

Algebra to_field(const Algebra& a, std::uint32_t prime) {
    if (prime == 0) return a;
    std::vector<Scalar> sc;
    sc.reserve(a.structure_constants().size());
    for (const auto& s : a.structure_constants()) sc.push_back(convert(s, prime));
    return Algebra(a.dim(), std::move(sc), convert(a.unit(), prime), a.label());
}

Algebra algebra_from_json(const json& j, std::uint32_t prime) {
    if (j.is_string()) return to_field(named_algebra(j.get<std::string>()), prime);
    if (j.is_object() && j.contains("named")) return algebra_from_json(j.at("named"), prime);
    std::size_t n = count_of(field(j, "dim"), "dim");
    Vector unit = vector_from_json(field(j, "unit"), prime);
    if (unit.size() != n) throw ParseError("unit has the wrong length");
    std::vector<Scalar> sc(n * n * n, prime == 0 ? Scalar(0) : Scalar::residue(0, prime));
    for (const auto& t : field(j, "structure_constants")) {
        if (!t.is_array() || t.size() != 4) throw ParseError("structure constant must be [i, j, k, c]");
        std::size_t i = count_of(t[0], "index"), jj = count_of(t[1], "index"), k = count_of(t[2], "index");
        if (i >= n || jj >= n || k >= n) throw ParseError("structure constant index out of range");
        sc[(i * n + jj) * n + k] = scalar_from_json(t[3], prime);
    }
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
    return Algebra(n, std::move(sc), std::move(unit), std::move(label));
}

AlgebraMap map_from_json(const json& j, std::uint32_t prime) {
    if (j.is_object() && j.contains("unit")) {
        auto f = unit_map(algebra_from_json(j.at("unit"), prime));
        return AlgebraMap(to_field(f.src(), prime), f.tgt(), matrix_from_json(to_json(f.mat()), prime));
    }
    if (j.is_object() && j.contains("identity")) return identity_map(algebra_from_json(j.at("identity"), prime));
    if (j.is_object() && j.contains("diagonal")) {
        auto f = fixtures::diagonal_inclusion(count_of(j.at("diagonal"), "diagonal"));
        return AlgebraMap(to_field(f.src(), prime), to_field(f.tgt(), prime),
                          matrix_from_json(to_json(f.mat()), prime));
    }
    if (j.is_object() && j.contains("compose")) {
        const auto& parts = j.at("compose");
        if (!parts.is_array() || parts.size() != 2) throw ParseError("compose takes [g, f]");
        return compose_maps(map_from_json(parts[0], prime), map_from_json(parts[1], prime));
    }
    Algebra src = algebra_from_json(field(j, "src"), prime);
    Algebra tgt = algebra_from_json(field(j, "tgt"), prime);
    Matrix mat = matrix_from_json(field(j, "matrix"), prime);
    if (mat.rows() != tgt.dim() || mat.cols() != src.dim()) throw ParseError("map matrix has the wrong shape");
    return AlgebraMap(src, tgt, mat);
}

Bimodule bimodule_from_json(const json& j, std::uint32_t prime) {
    if (j.is_object() && j.contains("regular")) return regular_bimodule(algebra_from_json(j.at("regular"), prime));
    if (j.is_object() && j.contains("restriction"))
        return restriction_bimodule(map_from_json(j.at("restriction"), prime));
    auto convert_module = [&](const Bimodule& m) {
        std::vector<Matrix> l, r;
        for (const auto& x : m.lact()) l.push_back(matrix_from_json(to_json(x), prime));
        for (const auto& x : m.ract()) r.push_back(matrix_from_json(to_json(x), prime));
        return Bimodule(to_field(m.left(), prime), to_field(m.right(), prime), m.dim(), l, r);
    };
    if (j.is_object() && j.contains("column")) return convert_module(column_module(count_of(j.at("column"), "column")));
    if (j.is_object() && j.contains("row")) return convert_module(row_module(count_of(j.at("row"), "row")));
    Algebra left = algebra_from_json(field(j, "left"), prime);
    Algebra right = algebra_from_json(field(j, "right"), prime);
    std::size_t n = count_of(field(j, "dim"), "dim");
    auto lact = matrices_from_json(field(j, "lact"), prime);
    auto ract = matrices_from_json(field(j, "ract"), prime);
    if (lact.size() != left.dim() || ract.size() != right.dim())
        throw ParseError("one action matrix per basis element is required");
    for (const auto& m : lact)
        if (m.rows() != n || m.cols() != n) throw ParseError("action matrix has the wrong shape");
    for (const auto& m : ract)
        if (m.rows() != n || m.cols() != n) throw ParseError("action matrix has the wrong shape");
    return Bimodule(left, right, n, std::move(lact), std::move(ract));
}

BimoduleMap bimodule_map_from_json(const json& j, std::uint32_t prime) {
    if (j.is_object() && j.contains("identity"))
        return identity_bimodule_map(bimodule_from_json(j.at("identity"), prime));
    Bimodule src = bimodule_from_json(field(j, "src"), prime);
    Bimodule tgt = bimodule_from_json(field(j, "tgt"), prime);
    Matrix mat = matrix_from_json(field(j, "matrix"), prime);
    if (mat.rows() != tgt.dim() || mat.cols() != src.dim()) throw ParseError("map matrix has the wrong shape");
    return {src, tgt, mat};
}

Cospan cospan_from_json(const json& j, std::uint32_t prime) {
    if (j.is_object() && j.contains("identity")) return identity_cospan(algebra_from_json(j.at("identity"), prime));
    AlgebraMap a = map_from_json(field(j, "legA"), prime);
    AlgebraMap b = map_from_json(field(j, "legB"), prime);
    if (a.tgt() != b.tgt()) throw ParseError("cospan legs have different targets");
    return Cospan{a.src(), b.src(), a.tgt(), a, b};
}

TwoDiagram diagram_from_json(const json& j, std::uint32_t prime) {
    if (j.is_object() && j.contains("identity")) return identity_2diagram(cospan_from_json(j.at("identity"), prime));
    TwoDiagram d;
    d.src = cospan_from_json(field(j, "src"), prime);
    d.tgt = cospan_from_json(field(j, "tgt"), prime);
    d.M = bimodule_from_json(field(j, "M"), prime);
    d.f = matrix_from_json(field(j, "f"), prime);
    d.g = matrix_from_json(field(j, "g"), prime);
    if (d.f.rows() != d.M.dim() || d.f.cols() != d.src.apex.dim() || d.g.rows() != d.M.dim() ||
        d.g.cols() != d.tgt.apex.dim())
        throw ParseError("2-diagram legs have the wrong shape");
    return d;
}

std::uint32_t parse_field(const std::string& text) {
    if (text == "rational" || text == "Q") return 0;
    if (text.rfind("gfp:", 0) == 0) {
        std::string digits = text.substr(4);
        if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed field '" + text + "'");
        std::uint32_t p = static_cast<std::uint32_t>(std::stoul(digits));
        if (p < 2) throw ParseError("field characteristic must be a prime");
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
            if (p % d == 0) throw ParseError("field characteristic must be a prime");
        return p;
    }
    throw ParseError("unknown field '" + text + "'");
}

}  // namespace centrum::io
