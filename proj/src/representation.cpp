#include "prelie/representation.hpp"

#include "prelie/error.hpp"

namespace prelie {

namespace {

Mat combine(const std::vector<Mat>& mats, const Vec& x, std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            m += x[i] * mats[i];
    return m;
}

void require_shapes(const Algebra& a, std::size_t n, const std::vector<Mat>& mats, const char* what)
{
    if (mats.size() != a.dim())
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": one matrix per basis element expected");
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": matrices must be space_dim square");
}

Verdict lie_rep_identity(const Algebra& lie_or_prelie, const std::vector<Mat>& rho, std::size_t n, bool commutator)
{
    const std::size_t d = lie_or_prelie.dim();
    const StructureTensor bracket = commutator ? lie_or_prelie.product().commutator() : lie_or_prelie.product();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat diff = combine(rho, bracket.basis_product(i, j), n) - (rho[i] * rho[j] - rho[j] * rho[i]);
            if (!diff.is_zero())
                return Verdict::fail("rho([x,y]) != [rho(x),rho(y)]", {i, j}, diff.data());
        }
    return Verdict::ok();
}

}  // namespace

Mat Representation::rho_of(const Vec& x) const { return combine(rho, x, space_dim); }
Mat Representation::mu_of(const Vec& x) const { return combine(mu, x, space_dim); }
Mat LieRepresentation::rho_of(const Vec& x) const { return combine(rho, x, space_dim); }

Verdict check_representation(const Representation& r)
{
    require_shapes(r.algebra, r.space_dim, r.rho, "rho");
    require_shapes(r.algebra, r.space_dim, r.mu, "mu");
    if (Verdict v = lie_rep_identity(r.algebra, r.rho, r.space_dim, true); !v)
        return v;

    const std::size_t d = r.algebra.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Mat lhs = r.rho[i] * r.mu[j] - r.mu[j] * r.rho[i];
            const Mat rhs = r.mu_of(r.algebra.basis_product(i, j)) - r.mu[j] * r.mu[i];
            const Mat diff = lhs - rhs;
            if (!diff.is_zero())
                return Verdict::fail("rho(x)mu(y) - mu(y)rho(x) != mu(x.y) - mu(y)mu(x)", {i, j}, diff.data());
        }
    return Verdict::ok();
}

Verdict check_lie_representation(const LieRepresentation& r)
{
    require_shapes(r.algebra, r.space_dim, r.rho, "rho");
    return lie_rep_identity(r.algebra, r.rho, r.space_dim, false);
}

Representation trivial_rep(const Algebra& a, std::size_t space_dim)
{
    Representation r{a, space_dim, {}, {}};
    r.rho.assign(a.dim(), Mat(space_dim, space_dim));
    r.mu.assign(a.dim(), Mat(space_dim, space_dim));
    return r;
}

Representation regular_rep(const Algebra& a)
{
    if (!check_pre_lie(a))
        throw Error(ErrorKind::NotPreLie, "regular representation");
    Representation r{a, a.dim(), {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        r.rho.push_back(left_mul(a, i));
        r.mu.push_back(right_mul(a, i));
    }
    return r;
}

Representation coregular_rep(const Algebra& a)
{
    if (!check_pre_lie(a))
        throw Error(ErrorKind::NotPreLie, "coregular representation");
    Representation r{a, a.dim(), {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Mat lt = left_mul(a, i).transpose();
        const Mat rt = right_mul(a, i).transpose();
        r.rho.push_back(rt - lt);
        r.mu.push_back(rt);
    }
    return r;
}

Representation morphism_rep(const MorphismTriple& t)
{
    Representation r{t.g(), t.h().dim(), {}, {}};
    for (std::size_t i = 0; i < t.g().dim(); ++i) {
        const Vec image = t.phi().col(i);
        r.rho.push_back(left_mul(t.h(), image));
        r.mu.push_back(right_mul(t.h(), image));
    }
    return r;
}

LieRepresentation hom_space_rep(const Algebra& a, const Representation& r)
{
    if (!(r.algebra.product() == a.product()))
        throw Error(ErrorKind::AlgebraMismatch, "representation is over a different algebra");
    const std::size_t d = a.dim();
    const std::size_t m = r.space_dim;
    const std::size_t n = d * m;
    LieRepresentation out{sub_adjacent(a), n, {}};

    for (std::size_t x = 0; x < d; ++x) {
        Mat act(n, n);
        // Column (j, v): f = e_j (x) e_v, i.e. f(e_j) = e_v and f = 0 elsewhere.
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t v = 0; v < m; ++v) {
                const std::size_t col = j * m + v;
                for (std::size_t y = 0; y < d; ++y) {
                    // rho(x) f(y): nonzero only for y == j.
                    if (y == j)
                        for (std::size_t w = 0; w < m; ++w)
                            act(y * m + w, col) += r.rho[x](w, v);
                    // mu(y) f(x): nonzero only for x == j.
                    if (x == j)
                        for (std::size_t w = 0; w < m; ++w)
                            act(y * m + w, col) += r.mu[y](w, v);
                    // -f(x.y): picks the e_j component of x.y.
                    const Scalar& c = a.product().at(x, y, j);
                    if (c != 0)
                        act(y * m + v, col) -= c;
                }
            }
        out.rho.push_back(std::move(act));
    }
    return out;
}

}  // namespace prelie
