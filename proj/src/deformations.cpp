#include "prelie/deformations.hpp"

#include "prelie/error.hpp"
#include "prelie/linalg.hpp"

#include <functional>

namespace prelie {

namespace {

using Residual2 = std::function<Vec(const Vec&, const Vec&)>;
using Residual3 = std::function<Vec(const Vec&, const Vec&, const Vec&)>;

Verdict over_pairs(std::size_t d, const std::string& reason, const Residual2& f)
{
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec diff = f(unit_vec(d, i), unit_vec(d, j));
            if (!is_zero(diff))
                return Verdict::fail(reason, {i, j}, std::move(diff));
        }
    return Verdict::ok();
}

Verdict over_triples(std::size_t d, const std::string& reason, const Residual3& f)
{
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec diff = f(unit_vec(d, i), unit_vec(d, j), unit_vec(d, k));
                if (!is_zero(diff))
                    return Verdict::fail(reason, {i, j, k}, std::move(diff));
            }
    return Verdict::ok();
}

Verdict over_basis(std::size_t d, const std::string& reason, const std::function<Vec(const Vec&)>& f)
{
    for (std::size_t i = 0; i < d; ++i) {
        Vec diff = f(unit_vec(d, i));
        if (!is_zero(diff))
            return Verdict::fail(reason, {i}, std::move(diff));
    }
    return Verdict::ok();
}

/// 0 = x.w(y,z) - y.w(x,z) + w(y,x).z - w(x,y).z - w(y,x.z) + w(x,y.z) - w([x,y],z)
Verdict cocycle_equation(const Algebra& a, const StructureTensor& w, const std::string& label)
{
    return over_triples(a.dim(), label, [&](const Vec& x, const Vec& y, const Vec& z) {
        const Vec xy = a.mul(x, y), yx = a.mul(y, x);
        return a.mul(x, w.apply(y, z)) - a.mul(y, w.apply(x, z)) + a.mul(w.apply(y, x), z) -
               a.mul(w.apply(x, y), z) - w.apply(y, a.mul(x, z)) + w.apply(x, a.mul(y, z)) - w.apply(xy - yx, z);
    });
}

/// 0 = w(w(x,y),z) - w(x,w(y,z)) - w(w(y,x),z) + w(y,w(x,z))
Verdict bracket_equation(std::size_t d, const StructureTensor& w, const std::string& label)
{
    return over_triples(d, label, [&](const Vec& x, const Vec& y, const Vec& z) {
        return w.apply(w.apply(x, y), z) - w.apply(x, w.apply(y, z)) - w.apply(w.apply(y, x), z) +
               w.apply(y, w.apply(x, z));
    });
}

/// x.N(y) + N(x).y - N(x.y)
Vec coboundary(const Algebra& a, const Mat& N, const Vec& x, const Vec& y)
{
    return a.mul(x, N * y) + a.mul(N * x, y) - N * a.mul(x, y);
}

void require_same_triple(const DeformationGenerator& a, const DeformationGenerator& b)
{
    if (!(a.triple == b.triple))
        throw Error(ErrorKind::TripleMismatch, "generators belong to different triples");
}

void require_closed(const DeformationGenerator& gen)
{
    const Verdict v = check_closed(gen);
    if (!v)
        throw Error(ErrorKind::NotClosed, "delta_preLie(omega, varpi, theta) != 0");
}

}  // namespace

const Certificate* LabeledReport::find(const std::string& label) const
{
    for (const auto& c : equations)
        if (c.label == label)
            return &c;
    return nullptr;
}

DeformationGenerator zero_generator(const MorphismTriple& t)
{
    return {t, StructureTensor(t.g().dim()), StructureTensor(t.h().dim()), Mat(t.h().dim(), t.g().dim())};
}

void require_shapes(const DeformationGenerator& gen)
{
    const std::size_t d = gen.triple.g().dim();
    const std::size_t e = gen.triple.h().dim();
    if (gen.omega.dim() != d || gen.varpi.dim() != e || gen.theta.rows() != e || gen.theta.cols() != d)
        throw Error(ErrorKind::ShapeMismatch, "generator does not fit the triple");
}

Vec generator_coords(const DeformationGenerator& gen)
{
    require_shapes(gen);
    const std::size_t d = gen.triple.g().dim();
    const std::size_t e = gen.triple.h().dim();
    Vec out = gen.omega.coords();
    out.insert(out.end(), gen.varpi.coords().begin(), gen.varpi.coords().end());
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t v = 0; v < e; ++v)
            out.push_back(gen.theta(v, j));
    return out;
}

DeformationGenerator generator_from_coords(const MorphismTriple& t, const Vec& coords)
{
    const std::size_t d = t.g().dim();
    const std::size_t e = t.h().dim();
    const std::size_t nw = d * d * d, nv = e * e * e;
    if (coords.size() != nw + nv + d * e)
        throw Error(ErrorKind::ShapeMismatch, "degree-1 triple cochain length");
    DeformationGenerator gen = zero_generator(t);
    gen.omega = StructureTensor::from_coords(d, Vec(coords.begin(), coords.begin() + nw));
    gen.varpi = StructureTensor::from_coords(e, Vec(coords.begin() + nw, coords.begin() + nw + nv));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t v = 0; v < e; ++v)
            gen.theta(v, j) = coords[nw + nv + j * e + v];
    return gen;
}

Vec degree0_coords(const MorphismTriple& t, const Mat& N, const Mat& S)
{
    const std::size_t d = t.g().dim();
    const std::size_t e = t.h().dim();
    if (N.rows() != d || N.cols() != d || S.rows() != e || S.cols() != e)
        throw Error(ErrorKind::ShapeMismatch, "N must be dim(g) square and S dim(h) square");
    Vec out;
    out.reserve(d * d + e * e);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t v = 0; v < d; ++v)
            out.push_back(N(v, j));
    for (std::size_t j = 0; j < e; ++j)
        for (std::size_t v = 0; v < e; ++v)
            out.push_back(S(v, j));
    return out;
}

Verdict check_closed(const DeformationGenerator& gen)
{
    const Vec image = delta_prelie_matrix(gen.triple, 1) * generator_coords(gen);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != 0)
            return Verdict::fail("delta_preLie(omega, varpi, theta) != 0", {i}, image);
    return Verdict::ok();
}

LabeledReport check_generator(const DeformationGenerator& gen)
{
    require_shapes(gen);
    const Algebra& g = gen.triple.g();
    const Algebra& h = gen.triple.h();
    const Mat& phi = gen.triple.phi();
    const auto& w = gen.omega;
    const auto& p = gen.varpi;
    const Mat& th = gen.theta;

    LabeledReport r;
    r.equations.push_back({"2-cocycle g", cocycle_equation(g, w, "2-cocycle g")});
    r.equations.push_back({"omega bracket", bracket_equation(g.dim(), w, "omega bracket")});
    r.equations.push_back({"eq:2-cocycle h", cocycle_equation(h, p, "eq:2-cocycle h")});
    r.equations.push_back({"varpi bracket", bracket_equation(h.dim(), p, "varpi bracket")});
    r.equations.push_back(
        {"1-cocycle phi", over_pairs(g.dim(), "1-cocycle phi", [&](const Vec& x, const Vec& y) {
             return h.mul(phi * x, th * y) + h.mul(th * x, phi * y) - th * g.mul(x, y) - phi * w.apply(x, y) +
                    p.apply(phi * x, phi * y);
         })});
    r.equations.push_back({"eq:theta2", over_pairs(g.dim(), "eq:theta2", [&](const Vec& x, const Vec& y) {
                               return th * w.apply(x, y) - p.apply(phi * x, th * y) - p.apply(th * x, phi * y) -
                                      h.mul(th * x, th * y);
                           })});

    const bool cocycles = r.equations[0].verdict.pass && r.equations[2].verdict.pass && r.equations[4].verdict.pass;
    if (cocycles != check_closed(gen).pass)
        throw Error(ErrorKind::CrossCheckMismatch, "cocycle equations disagree with delta_preLie");
    if (r.equations[1].verdict.pass != check_pre_lie(w).pass || r.equations[3].verdict.pass != check_pre_lie(p).pass)
        throw Error(ErrorKind::CrossCheckMismatch, "bracket equations disagree with check_pre_lie");
    return r;
}

LabeledReport check_equivalence(const DeformationGenerator& A, const DeformationGenerator& B, const Mat& N,
                                const Mat& S)
{
    require_same_triple(A, B);
    require_shapes(A);
    require_shapes(B);
    const Algebra& g = A.triple.g();
    const Algebra& h = A.triple.h();
    const Mat& phi = A.triple.phi();
    const Vec n0 = degree0_coords(A.triple, N, S);

    LabeledReport r;
    auto add = [&](const std::string& label, Verdict v) { r.equations.push_back({label, std::move(v)}); };
    add("2-exact", over_pairs(g.dim(), "2-exact", [&](const Vec& x, const Vec& y) {
            return A.omega.apply(x, y) - B.omega.apply(x, y) - coboundary(g, N, x, y);
        }));
    add("integral condition 1", over_pairs(g.dim(), "integral condition 1", [&](const Vec& x, const Vec& y) {
            return N * A.omega.apply(x, y) - B.omega.apply(x, N * y) - B.omega.apply(N * x, y) - g.mul(N * x, N * y);
        }));
    add("eq:con1", over_pairs(g.dim(), "eq:con1", [&](const Vec& x, const Vec& y) { return B.omega.apply(N * x, N * y); }));
    add("2-exact h", over_pairs(h.dim(), "2-exact h", [&](const Vec& u, const Vec& v) {
            return A.varpi.apply(u, v) - B.varpi.apply(u, v) - coboundary(h, S, u, v);
        }));
    add("integral condition 1 h", over_pairs(h.dim(), "integral condition 1 h", [&](const Vec& u, const Vec& v) {
            return S * A.varpi.apply(u, v) - B.varpi.apply(u, S * v) - B.varpi.apply(S * u, v) - h.mul(S * u, S * v);
        }));
    add("eq:con1 h",
        over_pairs(h.dim(), "eq:con1 h", [&](const Vec& u, const Vec& v) { return B.varpi.apply(S * u, S * v); }));
    add("eq:relation7", over_basis(g.dim(), "eq:relation7", [&](const Vec& x) {
            return A.theta * x - B.theta * x - phi * (N * x) + S * (phi * x);
        }));
    add("eq:relation8", over_basis(g.dim(), "eq:relation8",
                                   [&](const Vec& x) { return B.theta * (N * x) - S * (A.theta * x); }));

    const bool exact = r.equations[0].verdict.pass && r.equations[3].verdict.pass && r.equations[6].verdict.pass;
    const Vec diff = generator_coords(A) - generator_coords(B);
    Vec d0 = delta_prelie_matrix(A.triple, 0) * n0;
    if (exact != (diff == d0))
        throw Error(ErrorKind::CrossCheckMismatch, "exactness equations disagree with delta_preLie(N, S, 0)");
    return r;
}

LabeledReport check_nijenhuis_pair(const NijenhuisPair& p)
{
    const Mat& phi = p.triple.phi();
    const std::size_t e = p.triple.h().dim();
    if (p.N.rows() != p.triple.g().dim() || p.N.cols() != p.triple.g().dim() || p.S.rows() != e || p.S.cols() != e)
        throw Error(ErrorKind::ShapeMismatch, "N must be dim(g) square and S dim(h) square");
    LabeledReport r;
    r.equations.push_back({"Nijenhuis N", check_nijenhuis(p.triple.g(), p.N)});
    r.equations.push_back({"Nijenhuis S", check_nijenhuis(p.triple.h(), p.S)});
    const Mat lhs = p.S * phi * p.N;
    const Mat rhs = p.S * p.S * phi;
    Verdict v = Verdict::ok();
    for (std::size_t c = 0; c < lhs.cols() && v.pass; ++c) {
        Vec diff = lhs.col(c) - rhs.col(c);
        if (!is_zero(diff))
            v = Verdict::fail("S phi N != S^2 phi", {c}, std::move(diff));
    }
    r.equations.push_back({"eq:Nijenhuis3", std::move(v)});
    return r;
}

DeformationGenerator trivial_deformation(const NijenhuisPair& p)
{
    const LabeledReport r = check_nijenhuis_pair(p);
    if (!r.pass()) {
        std::string failed;
        for (const auto& c : r.equations)
            if (!c.verdict)
                failed += (failed.empty() ? "" : ", ") + c.label;
        throw Error(ErrorKind::NotNijenhuisPair, "failed: " + failed);
    }
    const Algebra& g = p.triple.g();
    const Algebra& h = p.triple.h();
    DeformationGenerator gen = zero_generator(p.triple);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            gen.omega.set_basis_product(i, j, coboundary(g, p.N, unit_vec(g.dim(), i), unit_vec(g.dim(), j)));
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            gen.varpi.set_basis_product(i, j, coboundary(h, p.S, unit_vec(h.dim(), i), unit_vec(h.dim(), j)));
    gen.theta = p.triple.phi() * p.N - p.S * p.triple.phi();
    return gen;
}

CohomologyClass cohomology_class(const DeformationGenerator& gen)
{
    require_closed(gen);
    const TripleCohomology h1 = triple_cohomology(gen.triple, 1, Side::PreLie);
    const auto& reps = h1.cohomology.representatives;
    const Mat d0 = delta_prelie_matrix(gen.triple, 0);

    std::vector<Vec> cols = reps;
    for (std::size_t c = 0; c < d0.cols(); ++c)
        cols.push_back(d0.col(c));
    const Vec x = generator_coords(gen);
    const auto sol = solve(Mat::from_columns(x.size(), cols), x);
    if (!sol)
        throw Error(ErrorKind::NotClosed, "cochain outside ker delta_1");
    CohomologyClass out;
    out.h1_dim = reps.size();
    out.coords.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.size()));
    return out;
}

Verdict same_class(const DeformationGenerator& A, const DeformationGenerator& B)
{
    require_same_triple(A, B);
    require_closed(A);
    require_closed(B);
    const Mat d0 = delta_prelie_matrix(A.triple, 0);
    const Vec diff = generator_coords(A) - generator_coords(B);
    if (solve(d0, diff))
        return Verdict::ok();
    return Verdict::fail("difference is not in im(delta_0)", {}, diff);
}

}  // namespace prelie
