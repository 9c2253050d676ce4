#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "prelie/error.hpp"

using namespace prelie;

TEST_CASE("check_representation examples", "[representation]")
{
    const Algebra B = corpus::square_to_e1();
    CHECK(check_representation(trivial_rep(B, 3)).pass);
    CHECK(check_representation(regular_rep(B)).pass);

    // (L, 0) is always a representation; (L, I) is not: mu(e1)mu(e1) - mu(e1.e1) = I.
    Representation zero_mu = regular_rep(B);
    for (auto& m : zero_mu.mu)
        m = Mat(2, 2);
    CHECK(check_representation(zero_mu).pass);
    Representation bad = regular_rep(B);
    for (auto& m : bad.mu)
        m = Mat::identity(2);
    CHECK_FALSE(check_representation(bad).pass);

    Representation wrong_shape = regular_rep(B);
    wrong_shape.rho.pop_back();
    CHECK_THROWS_AS(check_representation(wrong_shape), Error);
}

TEST_CASE("regular_rep examples", "[representation]")
{
    for (const Mat& m : regular_rep(corpus::abelian(3)).rho)
        CHECK(m.is_zero());
    const Representation r = regular_rep(corpus::square_to_e1());
    const Mat e2_to_e1{{0, 1}, {0, 0}};
    CHECK(r.rho[1] == e2_to_e1);
    CHECK(r.mu[1] == e2_to_e1);
    CHECK(r.rho[0].is_zero());
}

TEST_CASE("coregular_rep examples", "[representation]")
{
    for (const Mat& m : coregular_rep(corpus::abelian(2)).mu)
        CHECK(m.is_zero());
    const Representation r = coregular_rep(corpus::idempotent_line());
    CHECK(r.rho[0] == Mat{{0}});
    CHECK(r.mu[0] == Mat{{1}});
}

TEST_CASE("morphism_rep examples", "[representation]")
{
    const Algebra A = corpus::two_dim_nonabelian();
    const Algebra B = corpus::square_to_e1();
    const Representation zero = morphism_rep(MorphismTriple(A, B, Mat(2, 2)));
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(zero.rho[i].is_zero());
        CHECK(zero.mu[i].is_zero());
    }
    const Representation id = morphism_rep(MorphismTriple(A, A, Mat::identity(2)));
    const Representation reg = regular_rep(A);
    CHECK(id.rho == reg.rho);
    CHECK(id.mu == reg.mu);
}

TEST_CASE("hom_space_rep examples", "[representation]")
{
    const Algebra ab = corpus::abelian(2);
    for (const Mat& m : hom_space_rep(ab, trivial_rep(ab, 2)).rho)
        CHECK(m.is_zero());
    // rho(x)f(y) + mu(y)f(x) - f(x.y) with every term f(e1): 1 + 1 - 1.
    const Algebra line = corpus::idempotent_line();
    const LieRepresentation h = hom_space_rep(line, regular_rep(line));
    CHECK(h.rho[0] == Mat{{1}});
    CHECK(h.algebra.flavor() == Flavor::Lie);
}

TEST_CASE("hom_space_rep rejects a foreign representation", "[representation]")
{
    try {
        hom_space_rep(corpus::two_dim_nonabelian(), regular_rep(corpus::square_to_e1()));
        FAIL("expected AlgebraMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AlgebraMismatch);
    }
}

TEST_CASE("representation constructors on a random corpus", "[representation][property]")
{
    corpus::Rng rng(21);
    for (const Algebra& a : corpus::prelie_corpus(rng, 6)) {
        const Representation reg = regular_rep(a);
        const Representation co = coregular_rep(a);
        CHECK(check_representation(reg).pass);
        CHECK(check_representation(co).pass);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(co.rho[i] == Scalar(-1) * reg.rho[i].transpose() + reg.mu[i].transpose());
            CHECK(co.mu[i] == reg.mu[i].transpose());
        }
        for (const Representation* r : {&reg, &co}) {
            const LieRepresentation h = hom_space_rep(a, *r);
            CHECK(check_lie_representation(h).pass);
            CHECK(h.space_dim == a.dim() * r->space_dim);
            for (std::size_t x = 0; x < a.dim(); ++x)
                CHECK(h.rho[x] == oracle::naive_hom_action(*r, x));
        }
    }
    for (const auto& nt : corpus::triple_corpus()) {
        const Representation m = morphism_rep(nt.triple);
        CHECK(check_representation(m).pass);
        CHECK(check_lie_representation(hom_space_rep(nt.triple.g(), m)).pass);
    }
}
