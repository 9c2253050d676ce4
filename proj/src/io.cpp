#include "prelie/io.hpp"

#include "prelie/error.hpp"

#include <fstream>
#include <sstream>

namespace prelie::io {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t count_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        parse_error(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

std::size_t one_based(const json& v, std::size_t dim, const char* what)
{
    long long i = 0;
    if (v.is_number_integer())
        i = v.get<long long>();
    else if (v.is_string()) {
        try {
            std::size_t used = 0;
            i = std::stoll(v.get<std::string>(), &used);
            if (used != v.get<std::string>().size())
                parse_error(std::string("bad index for ") + what);
        } catch (const std::logic_error&) {
            parse_error(std::string("bad index for ") + what);
        }
    } else {
        parse_error(std::string("bad index for ") + what);
    }
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                                    std::to_string(dim));
    return static_cast<std::size_t>(i - 1);
}

Algebra verified(const AlgebraFile& f, Flavor flavor) { return Algebra(f.product, flavor, f.basis); }

MorphismTriple triple_field(const Node& n, const MorphismTriple* fallback)
{
    if (n.value.contains("triple"))
        return triple_from_json(resolve(n.value.at("triple"), n.base));
    if (fallback)
        return *fallback;
    parse_error("missing field \"triple\" (or pass --triple)");
}

}  // namespace

Node load_file(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        parse_error("cannot open " + path.string());
    try {
        return {json::parse(in), fs::absolute(path).parent_path()};
    } catch (const json::exception& e) {
        parse_error(path.string() + ": " + e.what());
    }
}

Node resolve(const json& ref, const fs::path& base)
{
    if (ref.is_string()) {
        const fs::path p = fs::path(ref.get<std::string>());
        return load_file(p.is_absolute() ? p : base / p);
    }
    if (!ref.is_object())
        parse_error("expected an object or a file reference");
    return {ref, base};
}

json scalar_to_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_from_json(const json& j)
{
    if (j.is_string())
        return parse_scalar(j.get<std::string>());
    if (j.is_number_integer())
        return parse_scalar(std::to_string(j.get<long long>()));
    parse_error("scalars must be \"p/q\" strings or integers");
}

json mat_to_json(const Mat& m)
{
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(scalar_to_json(m(r, c)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const json& j)
{
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw Error(ErrorKind::ShapeMismatch, "\"entries\" must have " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!entries[r].is_array() || entries[r].size() != cols)
            throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(r + 1) + " must have " +
                                                      std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(entries[r][c]);
    }
    return m;
}

json products_to_json(const StructureTensor& t)
{
    json out = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            json o = json::object();
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (t.at(i, j, k) != 0)
                    o[std::to_string(k + 1)] = scalar_to_json(t.at(i, j, k));
            if (!o.empty())
                out.push_back(json{{"i", i + 1}, {"j", j + 1}, {"out", std::move(o)}});
        }
    return out;
}

StructureTensor products_from_json(const json& j, std::size_t dim)
{
    if (!j.is_array())
        parse_error("products must be a list");
    StructureTensor t(dim);
    for (const json& p : j) {
        const std::size_t i = one_based(field(p, "i"), dim, "product i");
        const std::size_t jj = one_based(field(p, "j"), dim, "product j");
        const json& out = field(p, "out");
        if (!out.is_object())
            parse_error("product \"out\" must be an object");
        for (auto it = out.begin(); it != out.end(); ++it)
            t.at(i, jj, one_based(json(it.key()), dim, "product output")) += scalar_from_json(it.value());
    }
    return t;
}

Flavor flavor_from_string(const std::string& s)
{
    if (s == "prelie")
        return Flavor::PreLie;
    if (s == "lie")
        return Flavor::Lie;
    if (s == "commassoc")
        return Flavor::CommAssoc;
    if (s == "unchecked")
        return Flavor::Unchecked;
    parse_error("unknown flavor \"" + s + "\"");
}

AlgebraFile algebra_file_from_json(const json& j)
{
    AlgebraFile f;
    const std::size_t dim = count_field(j, "dim");
    if (j.contains("flavor")) {
        if (!j.at("flavor").is_string())
            parse_error("flavor must be a string");
        f.flavor = flavor_from_string(j.at("flavor").get<std::string>());
    }
    if (j.contains("basis")) {
        const json& b = j.at("basis");
        if (!b.is_array() || b.size() != dim)
            throw Error(ErrorKind::ShapeMismatch, "basis must list " + std::to_string(dim) + " names");
        for (const json& name : b) {
            if (!name.is_string())
                parse_error("basis names must be strings");
            f.basis.push_back(name.get<std::string>());
        }
    }
    f.product = j.contains("products") ? products_from_json(j.at("products"), dim) : StructureTensor(dim);
    return f;
}

Algebra algebra_from_json(const json& j)
{
    const AlgebraFile f = algebra_file_from_json(j);
    return verified(f, f.flavor);
}

json algebra_to_json(const Algebra& a)
{
    json basis = json::array();
    for (const auto& b : a.basis())
        basis.push_back(b);
    return json{{"dim", a.dim()},
                {"basis", std::move(basis)},
                {"flavor", flavor_name(a.flavor())},
                {"products", products_to_json(a.product())}};
}

Representation representation_from_json(const Node& n)
{
    const json& j = n.value;
    const Node alg_node = resolve(field(j, "algebra"), n.base);
    const Algebra a = verified(algebra_file_from_json(alg_node.value), Flavor::PreLie);
    if (j.contains("kind")) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "regular")
            return regular_rep(a);
        if (kind == "coregular")
            return coregular_rep(a);
        if (kind == "trivial")
            return trivial_rep(a, count_field(j, "space_dim"));
        parse_error("unknown representation kind \"" + kind + "\"");
    }
    Representation r{a, count_field(j, "space_dim"), {}, {}};
    for (const char* key : {"rho", "mu"}) {
        const json& list = field(j, key);
        if (!list.is_array() || list.size() != a.dim())
            throw Error(ErrorKind::ShapeMismatch, std::string("\"") + key + "\" needs one matrix per basis element");
        auto& target = key[0] == 'r' ? r.rho : r.mu;
        for (const json& m : list) {
            Mat mat = mat_from_json(m);
            if (mat.rows() != r.space_dim || mat.cols() != r.space_dim)
                throw Error(ErrorKind::ShapeMismatch, "action matrices must be space_dim square");
            target.push_back(std::move(mat));
        }
    }
    return r;
}

json representation_to_json(const Representation& r)
{
    json rho = json::array(), mu = json::array();
    for (const auto& m : r.rho)
        rho.push_back(mat_to_json(m));
    for (const auto& m : r.mu)
        mu.push_back(mat_to_json(m));
    return json{{"algebra", algebra_to_json(r.algebra)},
                {"space_dim", r.space_dim},
                {"rho", std::move(rho)},
                {"mu", std::move(mu)}};
}

TripleFile triple_file_from_json(const Node& n)
{
    TripleFile t;
    t.g = algebra_file_from_json(resolve(field(n.value, "g"), n.base).value);
    t.h = algebra_file_from_json(resolve(field(n.value, "h"), n.base).value);
    t.phi = mat_from_json(field(n.value, "phi"));
    if (t.phi.rows() != t.h.product.dim() || t.phi.cols() != t.g.product.dim())
        throw Error(ErrorKind::ShapeMismatch, "phi must be dim(h) x dim(g)");
    return t;
}

MorphismTriple triple_from_json(const Node& n)
{
    const TripleFile t = triple_file_from_json(n);
    return MorphismTriple(verified(t.g, Flavor::Unchecked), verified(t.h, Flavor::Unchecked), t.phi);
}

json triple_to_json(const MorphismTriple& t)
{
    return json{{"g", algebra_to_json(t.g())}, {"h", algebra_to_json(t.h())}, {"phi", mat_to_json(t.phi())}};
}

DeformationGenerator generator_from_json(const Node& n, const MorphismTriple* fallback)
{
    DeformationGenerator gen = zero_generator(triple_field(n, fallback));
    const json& j = n.value;
    if (j.contains("omega"))
        gen.omega = products_from_json(j.at("omega"), gen.triple.g().dim());
    if (j.contains("varpi"))
        gen.varpi = products_from_json(j.at("varpi"), gen.triple.h().dim());
    if (j.contains("theta"))
        gen.theta = mat_from_json(j.at("theta"));
    require_shapes(gen);
    return gen;
}

json generator_to_json(const DeformationGenerator& gen, bool embed_triple)
{
    json j = json::object();
    if (embed_triple)
        j["triple"] = triple_to_json(gen.triple);
    j["omega"] = products_to_json(gen.omega);
    j["varpi"] = products_to_json(gen.varpi);
    j["theta"] = mat_to_json(gen.theta);
    return j;
}

NijenhuisPair pair_from_json(const Node& n, const MorphismTriple* fallback)
{
    NijenhuisPair p{triple_field(n, fallback), mat_from_json(field(n.value, "N")), mat_from_json(field(n.value, "S"))};
    const std::size_t d = p.triple.g().dim(), e = p.triple.h().dim();
    if (p.N.rows() != d || p.N.cols() != d || p.S.rows() != e || p.S.cols() != e)
        throw Error(ErrorKind::ShapeMismatch, "N must be dim(g) square and S dim(h) square");
    return p;
}

json pair_to_json(const NijenhuisPair& p)
{
    return json{{"triple", triple_to_json(p.triple)}, {"N", mat_to_json(p.N)}, {"S", mat_to_json(p.S)}};
}

json cochain_to_json(const Cochain& c)
{
    json coords = json::array();
    for (const auto& s : c.coords)
        coords.push_back(scalar_to_json(s));
    return json{{"degree", c.degree},
                {"kind", c.kind == CochainKind::PreLie ? "prelie" : "ce"},
                {"coords", std::move(coords)}};
}

json verdict_to_json(const Verdict& v)
{
    json j{{"pass", v.pass}};
    if (!v.pass) {
        j["reason"] = v.reason;
        json at = json::array();
        for (auto i : v.at)
            at.push_back(i + 1);
        j["at"] = std::move(at);
        json diff = json::array();
        for (const auto& s : v.difference)
            diff.push_back(scalar_to_json(s));
        j["difference"] = std::move(diff);
    }
    return j;
}

json certificates_to_json(const std::vector<Certificate>& certs)
{
    json out = json::array();
    for (const auto& c : certs) {
        json j = verdict_to_json(c.verdict);
        j["label"] = c.label;
        out.push_back(std::move(j));
    }
    return out;
}

void write_file(const fs::path& path, const json& j)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        parse_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace prelie::io
