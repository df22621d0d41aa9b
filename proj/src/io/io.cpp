#include "kronwebs/io.hpp"

#include <fstream>
#include <sstream>

namespace kronwebs::io {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field '") + name + "'");
    return j.at(name);
}

namespace {

std::size_t size_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw SchemaError(std::string("field '") + name + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

const json& array_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_array()) throw SchemaError(std::string("field '") + name + "' must be an array");
    return v;
}

}  // namespace

json to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw SchemaError("rational must be a string \"p/q\" or an integer");
}

json to_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("vector must be an array");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

json to_json(const Mat& m) {
    json e = json::array();
    for (const auto& x : m.entries()) e.push_back(to_json(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Mat mat_from_json(const json& j) {
    const std::size_t r = size_field(j, "rows"), c = size_field(j, "cols");
    const json& e = array_field(j, "entries");
    if (e.size() != r * c) throw SchemaError("matrix entries must have rows*cols elements");
    std::vector<Scalar> v;
    for (const auto& x : e) v.push_back(scalar_from_json(x));
    return Mat(r, c, std::move(v));
}

json to_json(const Subspace& s) { return {{"ambient_dim", s.ambient_dim()}, {"basis", to_json(s.basis())}}; }

json to_json(const UniPoly& p, const std::string& var) {
    return {{"coeffs", to_json(p.coeffs())}, {"text", p.str(var)}};
}

json to_json(const BinaryForm& f) {
    if (f.is_zero()) return {{"degree", 0}, {"coeffs", json::array({"0"})}, {"text", "0"}};
    return {{"degree", f.degree()}, {"coeffs", to_json(f.coeffs())}, {"text", f.str()}};
}

json to_json(const ProjPoint& p) { return json::array({to_json(p.l1()), to_json(p.l2())}); }

ProjPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("projective point must be [l1, l2]");
    try {
        return ProjPoint(scalar_from_json(j[0]), scalar_from_json(j[1]));
    } catch (const InvalidArgument& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const LinearRelation& r) { return {{"dim_v", r.dim_v}, {"basis", to_json(r.w.basis())}}; }

LinearRelation relation_from_json(const json& j) {
    const std::size_t n = size_field(j, "dim_v");
    Mat b = mat_from_json(field(j, "basis"));
    if (b.rows() != 2 * n) throw SchemaError("relation basis must have 2*dim_v rows");
    return LinearRelation(n, Subspace::span(b));
}

json to_json(const Pencil& p) { return {{"p1", to_json(p.p1)}, {"p2", to_json(p.p2)}}; }

Pencil pencil_from_json(const json& j) {
    try {
        return Pencil(mat_from_json(field(j, "p1")), mat_from_json(field(j, "p2")));
    } catch (const DimensionMismatch& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const SkewPair& p) { return {{"n", p.n}, {"h1", to_json(p.h1)}, {"h2", to_json(p.h2)}}; }

SkewPair pair_from_json(const json& j) {
    const std::size_t n = size_field(j, "n");
    Mat h1 = mat_from_json(field(j, "h1")), h2 = mat_from_json(field(j, "h2"));
    if (h1.rows() != n || h1.cols() != n || h2.rows() != n || h2.cols() != n)
        throw SchemaError("pair matrices must be n x n");
    return SkewPair(h1, h2);
}

json to_json(const BlockSpec& b) {
    json j = {{"kind", b.kind == BlockKind::Kronecker ? "Kronecker" : "Jordan"}, {"dim", b.dim}, {"label", b.str()}};
    if (b.kind == BlockKind::Jordan) {
        j["at_infinity"] = b.at_infinity;
        j["exponent"] = b.exponent();
        if (!b.at_infinity) j["eigenvalue_factor"] = to_json(b.factor, "mu");
    }
    return j;
}

json to_json(const Decomposition& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(to_json(b));
    return {{"blocks", blocks}, {"basis", to_json(d.basis)}};
}

json to_json(const LieAlgebraData& g) {
    json br = json::array();
    for (const auto& b : g.brackets()) {
        json cs = json::array();
        for (const auto& [k, c] : b.coeffs) cs.push_back(json::array({k, to_json(c)}));
        br.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", cs}});
    }
    return {{"n", g.n()}, {"brackets", br}};
}

LieAlgebraData lie_from_json(const json& j) {
    const std::size_t n = size_field(j, "n");
    std::vector<BracketEntry> brackets;
    for (const auto& b : array_field(j, "brackets")) {
        BracketEntry e{size_field(b, "i"), size_field(b, "j"), {}};
        if (e.i >= n || e.j >= n) throw SchemaError("bracket index out of range");
        for (const auto& c : array_field(b, "coeffs")) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer())
                throw SchemaError("bracket coefficient must be [k, \"p/q\"]");
            const std::size_t k = c[0].get<std::size_t>();
            if (k >= n) throw SchemaError("bracket index out of range");
            e.coeffs.emplace_back(k, scalar_from_json(c[1]));
        }
        brackets.push_back(std::move(e));
    }
    return validate_lie(n, brackets);
}

json to_json(const MPoly& p) {
    json a = json::array();
    for (const auto& [m, c] : p.terms()) a.push_back(json::array({json(m), to_json(c)}));
    return a;
}

MPoly mpoly_from_json(std::size_t nvars, const json& j) {
    if (!j.is_array()) throw SchemaError("polynomial must be an array of [exponents, coefficient]");
    MPoly p(nvars);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != nvars)
            throw SchemaError("polynomial term must be [exponents, coefficient] with one exponent per variable");
        MPoly::Monomial m;
        for (const auto& e : t[0]) {
            if (!e.is_number_integer() || e.get<long>() < 0) throw SchemaError("exponents must be nonnegative integers");
            m.push_back(e.get<std::uint16_t>());
        }
        p.add_term(m, scalar_from_json(t[1]));
    }
    return p;
}

LieTable table_from_json(const json& j) {
    LieTable t;
    t.algebra = lie_from_json(j);
    const std::size_t n = t.algebra.n();
    t.name = j.contains("name") ? j.at("name").get<std::string>() : std::string("custom");
    if (j.contains("names")) t.names = j.at("names").get<std::vector<std::string>>();
    for (std::size_t i = t.names.size(); i < n; ++i) t.names.push_back("x" + std::to_string(i));
    if (j.contains("c1")) {
        t.c1 = vec_from_json(j.at("c1"));
        if (t.c1.size() != n) throw SchemaError("c1 must have n coordinates");
    }
    if (j.contains("invariants"))
        for (const auto& inv : j.at("invariants")) {
            MPoly p = mpoly_from_json(n, field(inv, "terms"));
            t.invariants.push_back(make_invariant(t.algebra, p));
        }
    if (j.contains("cartan")) {
        const json& c = j.at("cartan");
        for (const auto& v : field(c, "e")) t.cartan_e.push_back(vec_from_json(v));
        for (const auto& v : field(c, "f")) t.cartan_f.push_back(vec_from_json(v));
        for (const auto& v : field(c, "h")) t.cartan_h.push_back(vec_from_json(v));
    }
    return t;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace kronwebs::io
