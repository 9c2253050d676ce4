#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "files.hpp"
#include "prelie/cli.hpp"
#include "prelie/error.hpp"
#include "prelie/io.hpp"

#include <fstream>
#include <sstream>

using namespace prelie;
using io::json;

namespace {

struct Result {
    int code;
    json report;
    std::string raw;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "prelie");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    Result r{code, json(), out.str()};
    if (!r.raw.empty() && r.raw.front() == '{')
        r.report = json::parse(r.raw);
    return r;
}

json algebra_json(const Algebra& a) { return io::algebra_to_json(a); }

}  // namespace

TEST_CASE("io round trips", "[io]")
{
    corpus::Rng rng(61);
    for (const Algebra& a : corpus::prelie_corpus(rng, 3)) {
        const Algebra back = io::algebra_from_json(io::algebra_to_json(a));
        CHECK(back == a);
        CHECK(back.basis() == a.basis());
    }
    const Mat m = corpus::random_mat(rng, 2, 3, 3);
    CHECK(io::mat_from_json(io::mat_to_json(m)) == m);
    for (const auto& nt : corpus::triple_corpus()) {
        const MorphismTriple t = io::triple_from_json({io::triple_to_json(nt.triple), {}});
        CHECK(t == nt.triple);
    }
    for (const auto& np : corpus::pair_corpus()) {
        const NijenhuisPair p = io::pair_from_json({io::pair_to_json(np.pair), {}});
        CHECK(p.triple == np.pair.triple);
        CHECK(p.N == np.pair.N);
        CHECK(p.S == np.pair.S);
        const DeformationGenerator g = trivial_deformation(np.pair);
        const DeformationGenerator back = io::generator_from_json({io::generator_to_json(g), {}});
        CHECK(back.omega == g.omega);
        CHECK(back.varpi == g.varpi);
        CHECK(back.theta == g.theta);
    }
}

TEST_CASE("io accepts the documented algebra format", "[io]")
{
    const json j = json::parse(R"({"dim": 2, "basis": ["a", "b"], "flavor": "prelie",
        "products": [{"i": 2, "j": 2, "out": {"1": "1"}}]})");
    const Algebra a = io::algebra_from_json(j);
    CHECK(a.product() == corpus::square_to_e1().product());
    CHECK(a.basis() == std::vector<std::string>{"a", "b"});
    CHECK(io::scalar_from_json(json("-3/6")) == Scalar(-1, 2));
    CHECK(io::scalar_from_json(json(4)) == Scalar(4));
    CHECK_THROWS_AS(io::scalar_from_json(json("1/0")), Error);
    CHECK_THROWS_AS(io::algebra_from_json(json::parse(R"({"dim": 2, "products": [{"i": 3, "j": 1, "out": {}}]})")),
                    Error);
}

TEST_CASE("validate examples", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const auto ok = run_cli({"validate", dir.write("abelian.json", algebra_json(corpus::abelian(3)))});
    CHECK(ok.code == 0);
    CHECK(ok.report["pass"] == true);

    const json bad = json::parse(R"({"dim": 2, "products": [{"i": 1, "j": 1, "out": {"2": "1"}},
        {"i": 2, "j": 1, "out": {"1": "1"}}]})");
    const auto fail = run_cli({"validate", dir.write("bad.json", bad)});
    CHECK(fail.code == 1);
    CHECK(fail.report["checks"][0]["at"] == json::array({1, 2, 1}));

    const json malformed = json::parse(R"({"dim": 1, "products": [{"i": 1, "j": 1, "out": {"1": "1/0"}}]})");
    const auto mal = run_cli({"validate", dir.write("malformed.json", malformed)});
    CHECK(mal.code == 2);
    CHECK(mal.report["error"] == "Parse");

    std::ofstream(dir / "garbage.json") << "{not json";
    CHECK(run_cli({"validate", dir / "garbage.json"}).code == 2);
    CHECK(run_cli({"validate", dir / "missing.json"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("validate detects file kinds", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const auto nt = corpus::triple_corpus().front();
    const std::string t = dir.write("triple.json", io::triple_to_json(nt.triple));
    CHECK(run_cli({"validate", t}).report["kind"] == "triple");
    const std::string g = dir.write("gen.json", io::generator_to_json(zero_generator(nt.triple)));
    CHECK(run_cli({"validate", g}).report["kind"] == "generator");
    const std::string m = dir.write("map.json", io::mat_to_json(Mat::identity(2)));
    CHECK(run_cli({"validate", m}).report["kind"] == "map");
    const std::string r = dir.write("rep.json", io::representation_to_json(regular_rep(corpus::square_to_e1())));
    const auto rr = run_cli({"validate", r});
    CHECK(rr.report["kind"] == "representation");
    CHECK(rr.code == 0);
}

TEST_CASE("subadjacent command", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const Algebra der = derivation_to_prelie(corpus::dual_numbers(), corpus::x_ddx());
    const auto r = run_cli({"--emit", dir / "out", "subadjacent", dir.write("a.json", algebra_json(der))});
    CHECK(r.code == 0);
    const Algebra lie = io::algebra_from_json(io::load_file(dir / "out/subadjacent.json").value);
    CHECK(lie.product() == sub_adjacent(der).product());
}

TEST_CASE("cohomology examples", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const MorphismTriple empty(corpus::abelian(0), corpus::abelian(0), Mat(0, 0));
    const auto e = run_cli({"cohomology", dir.write("empty.json", io::triple_to_json(empty))});
    CHECK(e.code == 0);
    for (const auto& entry : e.report["prelie"])
        CHECK(entry["dim_H"] == 0);
    for (const auto& entry : e.report["ce"])
        CHECK(entry["dim_H"] == 0);

    const MorphismTriple line(corpus::idempotent_line(), corpus::idempotent_line(), Mat::identity(1));
    const auto l = run_cli({"cohomology", dir.write("line.json", io::triple_to_json(line))});
    REQUIRE(l.report["prelie"].size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(l.report["prelie"][k]["dim_H"] == 0);
    CHECK(l.report["prelie"][1]["dim_C"] == 3);

    for (const auto& nt : corpus::triple_corpus()) {
        const auto r = run_cli({"cohomology", "--side", "both", dir.write(nt.name + ".json", io::triple_to_json(nt.triple))});
        CHECK(r.code == 0);
        CHECK(r.report["phi_check"] == "pass");
        for (const auto& row : r.report["shift"])
            CHECK(row["equal"] == true);
    }
}

TEST_CASE("cohomology respects the size limit", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const auto nt = corpus::triple_corpus().front();
    const std::string t = dir.write("t.json", io::triple_to_json(nt.triple));
    CHECK(run_cli({"--size-limit", "3", "cohomology", t}).code == 3);
    CHECK(run_cli({"--side", "sideways", "cohomology", t}).code == 2);
    const auto p = run_cli({"--side", "prelie", "--max-degree", "2", "cohomology", t});
    CHECK(p.code == 0);
    CHECK(p.report["prelie"].size() == 3);
    CHECK_FALSE(p.report.contains("ce"));
}

TEST_CASE("phi-check command", "[cli]")
{
    files::TempDir dir("prelie_cli");
    for (const auto& nt : corpus::triple_corpus()) {
        const auto r = run_cli({"phi-check", dir.write("t.json", io::triple_to_json(nt.triple))});
        CHECK(r.code == 0);
        CHECK(r.report["phi_check"] == "pass");
    }
}

TEST_CASE("deform commands", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const auto pairs = corpus::pair_corpus();
    const NijenhuisPair& p = pairs.back().pair;
    const std::string triple = dir.write("triple.json", io::triple_to_json(p.triple));
    const std::string zero = dir.write("zero.json", io::generator_to_json(zero_generator(p.triple)));

    const auto check = run_cli({"deform", "check", zero});
    CHECK(check.code == 0);
    CHECK(check.report["equations"].size() == 6);

    const auto trivial = run_cli({"--emit", dir / "emit", "deform", "trivial", dir.write("pair.json", io::pair_to_json(p))});
    CHECK(trivial.code == 0);
    const std::string gen = dir / "emit/generator.json";
    CHECK(run_cli({"validate", gen}).code == 0);

    const std::string n = dir.write("N.json", io::mat_to_json(p.N));
    const std::string s = dir.write("S.json", io::mat_to_json(p.S));
    const auto eq = run_cli({"deform", "equiv", gen, zero, "--n", n, "--s", s});
    CHECK(eq.code == 0);
    CHECK(eq.report["equations"].size() == 8);

    const auto cls = run_cli({"deform", "class", gen, zero});
    CHECK(cls.code == 0);
    CHECK(cls.report["is_zero"] == true);

    // Generator without an embedded triple, supplied via --triple.
    const std::string bare = dir.write("bare.json", io::generator_to_json(zero_generator(p.triple), false));
    CHECK(run_cli({"--triple", triple, "deform", "check", bare}).code == 0);
    CHECK(run_cli({"deform", "check", bare}).code == 2);

    const MorphismTriple other(corpus::abelian(1), corpus::abelian(1), Mat::identity(1));
    const std::string foreign = dir.write("foreign.json", io::generator_to_json(zero_generator(other)));
    const auto mismatch = run_cli({"deform", "equiv", gen, foreign, "--n", n, "--s", s});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.report["error"] == "TripleMismatch");
}

TEST_CASE("deform check reports a failing equation", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const Algebra A = corpus::two_dim_nonabelian();
    DeformationGenerator g = zero_generator(MorphismTriple(A, A, Mat::identity(2)));
    g.omega = A.product();
    const auto r = run_cli({"deform", "check", dir.write("g.json", io::generator_to_json(g))});
    CHECK(r.code == 1);
    bool saw = false;
    for (const auto& e : r.report["equations"])
        if (e["label"] == "1-cocycle phi") {
            saw = true;
            CHECK(e["pass"] == false);
        }
    CHECK(saw);
}

TEST_CASE("construct examples", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const std::string dual = dir.write("dual.json", algebra_json(corpus::dual_numbers()));
    const auto der0 = run_cli({"--emit", dir / "d0", "construct", "derivation", "--algebra", dual, "--map",
                               dir.write("zero.json", io::mat_to_json(Mat(2, 2)))});
    CHECK(der0.code == 0);
    CHECK(io::algebra_from_json(io::load_file(dir / "d0/algebra.json").value).product().is_zero());

    const SymplecticForm s = corpus::symplectic_fixture();
    const auto sym = run_cli({"--emit", dir / "sym", "construct", "symplectic", "--algebra",
                              dir.write("lie.json", algebra_json(s.lie_algebra)), "--form",
                              dir.write("omega.json", io::mat_to_json(s.omega))});
    CHECK(sym.code == 0);
    CHECK(io::algebra_from_json(io::load_file(dir / "sym/algebra.json").value).product() ==
          corpus::two_dim_nonabelian().product());

    const std::string A = dir.write("A.json", algebra_json(corpus::two_dim_nonabelian()));
    const auto ns = run_cli({"construct", "s-matrix", "--algebra", A, "--map",
                             dir.write("ns.json", io::mat_to_json(Mat{{0, 1}, {0, 0}}))});
    CHECK(ns.code == 2);
    CHECK(ns.report["error"] == "NotSymmetric");

    const auto rb = run_cli({"construct", "rota-baxter", "--algebra", A, "--lambda", "0", "--map",
                             dir.write("id.json", io::mat_to_json(Mat::identity(2)))});
    CHECK(rb.code == 1);
    CHECK(rb.report["error"] == "NotRotaBaxter");

    CHECK(run_cli({"construct", "nijenhuis", "--algebra", A}).code == 2);
}

TEST_CASE("construct nij-pair and twisted", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const auto cps = corpus::compatible_pairs();
    const auto& cp = cps.back();
    const std::string rep = dir.write("rep.json", io::representation_to_json(cp.rep));
    const std::string t1 = dir.write("t1.json", io::mat_to_json(cp.T1));
    const std::string t2 = dir.write("t2.json", io::mat_to_json(cp.T2));
    const auto r = run_cli({"--emit", dir / "np", "construct", "nij-pair", "--rep", rep, "--t1", t1, "--t2", t2});
    CHECK(r.code == 0);
    for (const char* f : {"N.json", "S.json", "pair_T1.json", "pair_T2.json"})
        CHECK(run_cli({"validate", dir / (std::string("np/") + f)}).code == 0);
    const auto tw = run_cli({"--emit", dir / "tw", "construct", "twisted", "--rep", rep, "--t1", t1, "--t2", t2,
                             "--which", "2"});
    CHECK(tw.code == 0);
    CHECK(run_cli({"validate", dir / "tw/triple.json"}).code == 0);
    CHECK(run_cli({"construct", "nij-pair", "--rep", rep, "--t1", t1, "--t2",
                   dir.write("z.json", io::mat_to_json(Mat(2, 2)))})
              .code == 1);
}

TEST_CASE("reports are deterministic and render as text", "[cli]")
{
    files::TempDir dir("prelie_cli");
    const std::string t = dir.write("t.json", io::triple_to_json(corpus::triple_corpus()[3].triple));
    const auto a = run_cli({"cohomology", t});
    const auto b = run_cli({"cohomology", t});
    CHECK(a.raw == b.raw);
    const auto text = run_cli({"--format", "text", "cohomology", t});
    CHECK(text.code == 0);
    CHECK(text.raw.find("phi_check: pass") != std::string::npos);
    const auto to_file = run_cli({"--out", dir / "report.json", "cohomology", t});
    CHECK(to_file.raw.empty());
    CHECK(io::load_file(dir / "report.json").value.dump(2) + "\n" == a.raw);
}
