#include "prelie/cli.hpp"

#include "prelie/io.hpp"
#include "prelie/linalg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>

namespace prelie::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct Options {
    std::string format = "json";
    std::string out;
    std::string emit;
    std::size_t size_limit = kDefaultSizeLimit;
    int max_degree = 3;
    std::string side = "both";
    std::string triple;
};

/// Report plus overall verdict of one command.
struct Outcome {
    json report = json::object();
    bool pass = true;
};

class Emitter {
public:
    explicit Emitter(const std::string& dir) : dir_(dir) {}

    void operator()(Outcome& o, const std::string& name, const json& artifact) const
    {
        if (dir_.empty())
            return;
        const fs::path path = fs::path(dir_) / name;
        io::write_file(path, artifact);
        o.report["emitted"].push_back(path.string());
    }

private:
    std::string dir_;
};

json labeled(const std::string& label, const Verdict& v)
{
    json j = io::verdict_to_json(v);
    j["label"] = label;
    return j;
}

void add_check(Outcome& o, const std::string& label, const Verdict& v)
{
    o.report["checks"].push_back(labeled(label, v));
    o.pass = o.pass && v.pass;
}

void add_certificates(Outcome& o, const std::string& key, const std::vector<Certificate>& certs)
{
    o.report[key] = io::certificates_to_json(certs);
    o.pass = o.pass && all_pass(certs);
}

std::optional<MorphismTriple> fallback_triple(const Options& opt)
{
    if (opt.triple.empty())
        return std::nullopt;
    return io::triple_from_json(io::load_file(opt.triple));
}

Algebra load_algebra(const std::string& path, Flavor fallback)
{
    const io::AlgebraFile f = io::algebra_file_from_json(io::load_file(path).value);
    return Algebra(f.product, f.flavor == Flavor::Unchecked ? fallback : f.flavor, f.basis);
}

Mat load_map(const std::string& path) { return io::mat_from_json(io::load_file(path).value); }

// ---------------------------------------------------------------- validate

std::string detect_kind(const json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "top-level JSON value must be an object");
    if (j.contains("g") && j.contains("h") && j.contains("phi"))
        return "triple";
    if (j.contains("omega") || j.contains("varpi") || j.contains("theta"))
        return "generator";
    if (j.contains("N") && j.contains("S"))
        return "pair";
    if (j.contains("algebra"))
        return "representation";
    if (j.contains("rows") && j.contains("entries"))
        return "map";
    if (j.contains("coords"))
        return "cochain";
    if (j.contains("dim"))
        return "algebra";
    throw Error(ErrorKind::Parse, "unrecognized file: expected an algebra, map, representation, triple, "
                                  "generator, pair or cochain");
}

Verdict flavor_check(const StructureTensor& t, Flavor f)
{
    switch (f) {
    case Flavor::Lie: return check_jacobi(t);
    case Flavor::CommAssoc: return check_comm_assoc(t);
    default: return check_pre_lie(t);
    }
}

Outcome cmd_validate(const std::string& path, const Options& opt)
{
    const io::Node n = io::load_file(path);
    Outcome o;
    const std::string kind = detect_kind(n.value);
    o.report["kind"] = kind;
    if (kind == "algebra") {
        const io::AlgebraFile f = io::algebra_file_from_json(n.value);
        const Flavor fl = f.flavor == Flavor::Unchecked ? Flavor::PreLie : f.flavor;
        o.report["flavor"] = flavor_name(fl);
        add_check(o, flavor_name(fl), flavor_check(f.product, fl));
    } else if (kind == "triple") {
        const io::TripleFile t = io::triple_file_from_json(n);
        add_check(o, "g prelie", check_pre_lie(t.g.product));
        add_check(o, "h prelie", check_pre_lie(t.h.product));
        add_check(o, "phi homomorphism", check_homomorphism(t.g.product, t.h.product, t.phi));
    } else if (kind == "generator") {
        const auto fb = fallback_triple(opt);
        const DeformationGenerator gen = io::generator_from_json(n, fb ? &*fb : nullptr);
        const LabeledReport r = check_generator(gen);
        add_certificates(o, "equations", r.equations);
        add_check(o, "closed", check_closed(gen));
    } else if (kind == "pair") {
        const auto fb = fallback_triple(opt);
        const NijenhuisPair p = io::pair_from_json(n, fb ? &*fb : nullptr);
        add_certificates(o, "equations", check_nijenhuis_pair(p).equations);
    } else if (kind == "representation") {
        add_check(o, "representation", check_representation(io::representation_from_json(n)));
    } else if (kind == "map") {
        const Mat m = io::mat_from_json(n.value);
        o.report["shape"] = {m.rows(), m.cols()};
    } else {
        const json& c = n.value;
        if (!c.contains("degree") || !c.at("coords").is_array())
            throw Error(ErrorKind::Parse, "cochain needs \"degree\" and \"coords\"");
        for (const json& s : c.at("coords"))
            io::scalar_from_json(s);
        o.report["length"] = c.at("coords").size();
    }
    return o;
}

// ------------------------------------------------------------- subadjacent

Outcome cmd_subadjacent(const std::string& path, const Emitter& emit)
{
    const io::AlgebraFile f = io::algebra_file_from_json(io::load_file(path).value);
    const Algebra lie = sub_adjacent(Algebra(f.product, Flavor::Unchecked, f.basis));
    Outcome o;
    o.report["algebra"] = io::algebra_to_json(lie);
    add_check(o, "jacobi", check_jacobi(lie));
    emit(o, "subadjacent.json", io::algebra_to_json(lie));
    return o;
}

// -------------------------------------------------------------- cohomology

json degree_entry(const TripleCohomology& c, const MorphismTriple& t, std::size_t size_limit)
{
    const TripleBlocks b = triple_blocks(t, c.degree, c.side, size_limit);
    json reps = json::array();
    for (const auto& r : c.cohomology.representatives) {
        json coords = json::array();
        for (const auto& s : r)
            coords.push_back(io::scalar_to_json(s));
        reps.push_back(json{{"degree", c.degree},
                            {"blocks", {b.g, b.h, b.mixed}},
                            {"coords", std::move(coords)}});
    }
    return json{{"k", c.degree},
                {"dim_C", c.dim_cochains},
                {"rank_delta", c.rank_delta},
                {"dim_H", c.cohomology.dimension},
                {"representatives", std::move(reps)}};
}

Outcome cmd_cohomology(const std::string& path, const Options& opt)
{
    if (opt.side != "prelie" && opt.side != "ce" && opt.side != "both")
        throw Error(ErrorKind::Parse, "--side must be prelie, ce or both");
    const MorphismTriple t = io::triple_from_json(io::load_file(path));
    Outcome o;
    o.report["max_degree"] = opt.max_degree;
    std::vector<std::size_t> pre, ce;
    if (opt.side != "ce") {
        o.report["prelie"] = json::array();
        for (int k = 0; k <= opt.max_degree; ++k) {
            const auto c = triple_cohomology(t, k, Side::PreLie, opt.size_limit);
            pre.push_back(c.cohomology.dimension);
            o.report["prelie"].push_back(degree_entry(c, t, opt.size_limit));
        }
    }
    if (opt.side != "prelie") {
        o.report["ce"] = json::array();
        for (int k = -1; k < opt.max_degree; ++k) {
            const auto c = triple_cohomology(t, k, Side::CE, opt.size_limit);
            ce.push_back(c.cohomology.dimension);
            o.report["ce"].push_back(degree_entry(c, t, opt.size_limit));
        }
    }
    if (opt.side == "both") {
        const Verdict phi = verify_cochain_map(t, opt.max_degree, opt.size_limit);
        o.report["phi_check"] = phi.pass ? "pass" : "fail";
        o.report["phi_verdict"] = io::verdict_to_json(phi);
        o.pass = phi.pass;
        json shift = json::array();
        for (int k = 0; k <= opt.max_degree; ++k) {
            const bool eq = pre[k] == ce[k];
            shift.push_back(json{{"k", k}, {"dim_H_prelie", pre[k]}, {"dim_H_ce_k_minus_1", ce[k]}, {"equal", eq}});
            o.pass = o.pass && eq;
        }
        o.report["shift"] = std::move(shift);
    }
    return o;
}

Outcome cmd_phi_check(const std::string& path, const Options& opt)
{
    const MorphismTriple t = io::triple_from_json(io::load_file(path));
    Outcome o;
    const Verdict phi = verify_cochain_map(t, opt.max_degree, opt.size_limit);
    o.report["phi_check"] = phi.pass ? "pass" : "fail";
    add_check(o, "Phi intertwines delta_CE and delta_preLie", phi);
    json shift = json::array();
    for (int k = 1; k <= opt.max_degree; ++k) {
        const std::size_t a = triple_cohomology(t, k, Side::PreLie, opt.size_limit).cohomology.dimension;
        const std::size_t b = triple_cohomology(t, k - 1, Side::CE, opt.size_limit).cohomology.dimension;
        shift.push_back(json{{"k", k}, {"dim_H_prelie", a}, {"dim_H_ce_k_minus_1", b}, {"equal", a == b}});
        o.pass = o.pass && a == b;
    }
    o.report["shift"] = std::move(shift);
    return o;
}

// ----------------------------------------------------------------- deform

Outcome cmd_deform_check(const std::string& path, const Options& opt)
{
    const auto fb = fallback_triple(opt);
    const DeformationGenerator gen = io::generator_from_json(io::load_file(path), fb ? &*fb : nullptr);
    Outcome o;
    add_certificates(o, "equations", check_generator(gen).equations);
    add_check(o, "closed", check_closed(gen));
    return o;
}

Outcome cmd_deform_trivial(const std::string& path, const Options& opt, const Emitter& emit)
{
    const auto fb = fallback_triple(opt);
    const NijenhuisPair p = io::pair_from_json(io::load_file(path), fb ? &*fb : nullptr);
    const DeformationGenerator gen = trivial_deformation(p);
    Outcome o;
    o.report["generator"] = io::generator_to_json(gen, false);
    add_certificates(o, "pair", check_nijenhuis_pair(p).equations);
    add_certificates(o, "generator_equations", check_generator(gen).equations);
    add_check(o, "closed", check_closed(gen));
    add_certificates(o, "equivalence_to_zero", check_equivalence(gen, zero_generator(p.triple), p.N, p.S).equations);
    const CohomologyClass cls = cohomology_class(gen);
    add_check(o, "class is zero", cls.is_zero() ? Verdict::ok() : Verdict::fail("nonzero class", {}, cls.coords));
    emit(o, "generator.json", io::generator_to_json(gen));
    return o;
}

Outcome cmd_deform_equiv(const std::string& a, const std::string& b, const std::string& n_path,
                         const std::string& s_path, const Options& opt)
{
    const auto fb = fallback_triple(opt);
    const DeformationGenerator ga = io::generator_from_json(io::load_file(a), fb ? &*fb : nullptr);
    const DeformationGenerator gb = io::generator_from_json(io::load_file(b), fb ? &*fb : nullptr);
    Outcome o;
    add_certificates(o, "equations", check_equivalence(ga, gb, load_map(n_path), load_map(s_path)).equations);
    return o;
}

Outcome cmd_deform_class(const std::string& a, const std::string& b, const Options& opt)
{
    const auto fb = fallback_triple(opt);
    const DeformationGenerator ga = io::generator_from_json(io::load_file(a), fb ? &*fb : nullptr);
    Outcome o;
    const CohomologyClass cls = cohomology_class(ga);
    json coords = json::array();
    for (const auto& s : cls.coords)
        coords.push_back(io::scalar_to_json(s));
    o.report["h1_dim"] = cls.h1_dim;
    o.report["class"] = std::move(coords);
    o.report["is_zero"] = cls.is_zero();
    if (!b.empty()) {
        const DeformationGenerator gb = io::generator_from_json(io::load_file(b), fb ? &*fb : nullptr);
        add_check(o, "same class", same_class(ga, gb));
    }
    return o;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
    std::string algebra, rep, map, form, t1, t2, n_map, s_map;
    std::string lambda = "0";
    int which = 1;
};

void add_triple_checks(Outcome& o, const MorphismTriple& t)
{
    add_check(o, "source prelie", check_pre_lie(t.g()));
    add_check(o, "target prelie", check_pre_lie(t.h()));
    add_check(o, "homomorphism", check_homomorphism(t.g(), t.h(), t.phi()));
    o.report["triple"] = io::triple_to_json(t);
}

void require(const std::string& value, const char* flag)
{
    if (value.empty())
        throw Error(ErrorKind::Parse, std::string("missing ") + flag);
}

Representation load_rep(const std::string& path) { return io::representation_from_json(io::load_file(path)); }

Outcome cmd_construct(const std::string& kind, const ConstructArgs& a, const Emitter& emit)
{
    Outcome o;
    o.report["construction"] = kind;
    if (kind == "derivation") {
        require(a.algebra, "--algebra");
        require(a.map, "--map");
        const Algebra alg = derivation_to_prelie(load_algebra(a.algebra, Flavor::CommAssoc), load_map(a.map));
        add_check(o, "prelie", check_pre_lie(alg));
        o.report["algebra"] = io::algebra_to_json(alg);
        emit(o, "algebra.json", io::algebra_to_json(alg));
    } else if (kind == "symplectic") {
        require(a.algebra, "--algebra");
        require(a.form, "--form");
        const SymplecticForm s{load_algebra(a.algebra, Flavor::Lie), load_map(a.form)};
        const Algebra alg = symplectic_to_prelie(s);
        add_check(o, "prelie", check_pre_lie(alg));
        const Algebra lie = sub_adjacent(alg);
        add_check(o, "sub-adjacent recovers the Lie algebra",
                  lie.product() == s.lie_algebra.product() ? Verdict::ok()
                                                           : Verdict::fail("sub-adjacent bracket differs", {}));
        o.report["algebra"] = io::algebra_to_json(alg);
        emit(o, "algebra.json", io::algebra_to_json(alg));
    } else if (kind == "rota-baxter" || kind == "nijenhuis" || kind == "s-matrix") {
        require(a.algebra, "--algebra");
        require(a.map, "--map");
        const Algebra alg = load_algebra(a.algebra, Flavor::PreLie);
        const Mat m = load_map(a.map);
        const MorphismTriple t = kind == "rota-baxter" ? rota_baxter_triple(alg, m, parse_scalar(a.lambda))
                                 : kind == "nijenhuis" ? nijenhuis_triple(alg, m)
                                                       : s_matrix_triple({alg, m});
        add_triple_checks(o, t);
        emit(o, "triple.json", io::triple_to_json(t));
    } else if (kind == "o-operator") {
        require(a.rep, "--rep");
        require(a.map, "--map");
        const Representation rep = load_rep(a.rep);
        const MorphismTriple t = o_operator_triple(rep.algebra, rep, load_map(a.map));
        add_triple_checks(o, t);
        emit(o, "triple.json", io::triple_to_json(t));
    } else if (kind == "nij-pair" || kind == "twisted") {
        require(a.rep, "--rep");
        const Representation rep = load_rep(a.rep);
        const Algebra& g = rep.algebra;
        Mat T, N, S;
        if (!a.t1.empty() || !a.t2.empty()) {
            require(a.t1, "--t1");
            require(a.t2, "--t2");
            const Mat T1 = load_map(a.t1), T2 = load_map(a.t2);
            const NijenhuisPairConstruction c = nijenhuis_pair_from_compatible(g, rep, T1, T2);
            N = c.N;
            S = c.S;
            T = a.which == 2 ? T2 : T1;
            add_certificates(o, "certificates", c.certificates);
            if (kind == "nij-pair") {
                emit(o, "N.json", io::mat_to_json(N));
                emit(o, "S.json", io::mat_to_json(S));
                for (int i : {1, 2}) {
                    // Source slot of the pair acts on V, target slot on g.
                    const MorphismTriple t = o_operator_triple(g, rep, i == 1 ? T1 : T2);
                    const NijenhuisPair p{t, S, N};
                    add_certificates(o, "pair_T" + std::to_string(i), check_nijenhuis_pair(p).equations);
                    emit(o, "pair_T" + std::to_string(i) + ".json", io::pair_to_json(p));
                }
            }
            o.report["N"] = io::mat_to_json(N);
            o.report["S"] = io::mat_to_json(S);
        } else if (kind == "twisted") {
            require(a.map, "--map (or --t1/--t2)");
            require(a.n_map, "--n");
            require(a.s_map, "--s");
            T = load_map(a.map);
            N = load_map(a.n_map);
            S = load_map(a.s_map);
        } else {
            throw Error(ErrorKind::Parse, "nij-pair needs --t1 and --t2");
        }
        if (kind == "twisted") {
            const MorphismTriple t = twisted_triple(g, rep, T, N, S);
            add_triple_checks(o, t);
            emit(o, "triple.json", io::triple_to_json(t));
        }
    } else {
        throw Error(ErrorKind::Parse, "unknown construction \"" + kind + "\"");
    }
    return o;
}

// ----------------------------------------------------------------- output

void render_text(const json& j, std::ostream& os, int indent, const std::string& key)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string prefix = key.empty() ? pad : pad + key + ": ";
    if (j.is_object()) {
        if (!key.empty())
            os << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), os, key.empty() ? indent : indent + 1, it.key());
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            scalars = scalars && !e.is_structured();
        if (scalars) {
            os << prefix << "[";
            for (std::size_t i = 0; i < j.size(); ++i)
                os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            os << "]\n";
        } else {
            os << pad << key << ":\n";
            for (const auto& e : j) {
                os << pad << "  -\n";
                render_text(e, os, indent + 2, "");
            }
        }
    } else {
        os << prefix << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void write_report(const json& report, const Options& opt, std::ostream& out)
{
    std::ofstream file;
    std::ostream* os = &out;
    if (!opt.out.empty() && opt.out != "-") {
        if (fs::path(opt.out).has_parent_path())
            fs::create_directories(fs::path(opt.out).parent_path());
        file.open(opt.out);
        if (!file)
            throw Error(ErrorKind::Parse, "cannot write " + opt.out);
        os = &file;
    }
    if (opt.format == "text")
        render_text(report, *os, 0, "");
    else
        *os << report.dump(2) << '\n';
}

}  // namespace

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::NonSquare:
    case ErrorKind::FlavorMismatch:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::ArityMismatch:
    case ErrorKind::TripleMismatch:
    case ErrorKind::NotSymmetric:
        return kInputError;
    case ErrorKind::SizeLimit:
        return kResourceLimit;
    default:
        return kMathFailure;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with pre-Lie algebras, morphism triples and their cohomology", "prelie"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "Write the report to this file instead of stdout");
    app.add_option("--emit", opt.emit, "Directory for emitted artifacts (algebras, triples, generators)");
    app.add_option("--size-limit", opt.size_limit, "Largest cochain space to materialize")->check(CLI::PositiveNumber);
    app.add_option("--max-degree", opt.max_degree, "Highest degree for cohomology")->check(CLI::NonNegativeNumber);
    app.add_option("--side", opt.side, "prelie, ce or both")->check(CLI::IsMember({"prelie", "ce", "both"}));
    app.add_option("--triple", opt.triple, "Triple file for generators and pairs that do not embed one");

    std::string file_a, file_b, n_map, s_map, construct_kind;
    ConstructArgs cargs;

    auto* validate = app.add_subcommand("validate", "Check an algebra, map, representation, triple, generator or pair");
    validate->add_option("file", file_a)->required();
    auto* subadj = app.add_subcommand("subadjacent", "Sub-adjacent Lie algebra of a pre-Lie algebra");
    subadj->add_option("file", file_a)->required();
    auto* cohom = app.add_subcommand("cohomology", "Cohomology of a morphism triple");
    cohom->add_option("file", file_a)->required();
    auto* phi = app.add_subcommand("phi-check", "Verify the cochain isomorphism Phi and the degree shift");
    phi->add_option("file", file_a)->required();

    auto* deform = app.add_subcommand("deform", "Infinitesimal deformations");
    deform->require_subcommand(1);
    auto* d_check = deform->add_subcommand("check", "Check a deformation generator");
    d_check->add_option("generator", file_a)->required();
    auto* d_trivial = deform->add_subcommand("trivial", "Trivial deformation of a Nijenhuis pair");
    d_trivial->add_option("pair", file_a)->required();
    auto* d_equiv = deform->add_subcommand("equiv", "Check an equivalence of two generators");
    d_equiv->add_option("generator_a", file_a)->required();
    d_equiv->add_option("generator_b", file_b)->required();
    d_equiv->add_option("--n", n_map, "Map N on g")->required();
    d_equiv->add_option("--s", s_map, "Map S on h")->required();
    auto* d_class = deform->add_subcommand("class", "Class in H^1 and optional same-class test");
    d_class->add_option("generator", file_a)->required();
    d_class->add_option("other", file_b);

    auto* construct = app.add_subcommand("construct", "Build pre-Lie algebras and triples from operators");
    construct->add_option("kind", construct_kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"derivation", "symplectic", "rota-baxter", "nijenhuis", "o-operator", "s-matrix",
                               "nij-pair", "twisted"}));
    construct->add_option("--algebra", cargs.algebra, "Algebra file");
    construct->add_option("--rep", cargs.rep, "Representation file");
    construct->add_option("--map", cargs.map, "Operator (LinearMap file)");
    construct->add_option("--form", cargs.form, "Symplectic form (LinearMap file)");
    construct->add_option("--lambda", cargs.lambda, "Rota-Baxter weight");
    construct->add_option("--t1", cargs.t1, "First O-operator");
    construct->add_option("--t2", cargs.t2, "Second (invertible) O-operator");
    construct->add_option("--which", cargs.which, "Which O-operator the twisted triple uses")
        ->check(CLI::IsMember({1, 2}));
    construct->add_option("--n", cargs.n_map, "Nijenhuis operator N on g (twisted)");
    construct->add_option("--s", cargs.s_map, "Nijenhuis operator S on V (twisted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    const Emitter emit(opt.emit);
    try {
        Outcome o;
        std::string command;
        if (*validate) {
            command = "validate";
            o = cmd_validate(file_a, opt);
        } else if (*subadj) {
            command = "subadjacent";
            o = cmd_subadjacent(file_a, emit);
        } else if (*cohom) {
            command = "cohomology";
            o = cmd_cohomology(file_a, opt);
        } else if (*phi) {
            command = "phi-check";
            o = cmd_phi_check(file_a, opt);
        } else if (*d_check) {
            command = "deform check";
            o = cmd_deform_check(file_a, opt);
        } else if (*d_trivial) {
            command = "deform trivial";
            o = cmd_deform_trivial(file_a, opt, emit);
        } else if (*d_equiv) {
            command = "deform equiv";
            o = cmd_deform_equiv(file_a, file_b, n_map, s_map, opt);
        } else if (*d_class) {
            command = "deform class";
            o = cmd_deform_class(file_a, file_b, opt);
        } else {
            command = "construct " + construct_kind;
            o = cmd_construct(construct_kind, cargs, emit);
        }
        json report = json{{"command", command}, {"pass", o.pass}};
        report.update(o.report);
        write_report(report, opt, out);
        return o.pass ? kPass : kMathFailure;
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        try {
            write_report(json{{"pass", false}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}},
                         opt, out);
        } catch (const Error&) {
        }
        err << "prelie: " << e.what() << '\n';
        return code;
    } catch (const std::exception& e) {
        err << "prelie: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace prelie::cli
