#include "prelie/triple.hpp"

#include "prelie/error.hpp"
#include "prelie/linalg.hpp"

#include <functional>

namespace prelie {

namespace {

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

std::size_t prelie_dim(std::size_t wedge_len, std::size_t d, std::size_t m, std::size_t limit)
{
    return PreLieCochainSpace(wedge_len + 1, d, m, limit).dim();
}

std::size_t ce_dim(std::size_t degree, std::size_t d, std::size_t w, std::size_t limit)
{
    return CECochainSpace(degree, d, w, limit).dim();
}

}  // namespace

TripleBlocks triple_blocks(const MorphismTriple& t, int k, Side side, std::size_t size_limit)
{
    const std::size_t d = t.g().dim();
    const std::size_t e = t.h().dim();
    TripleBlocks b;
    if (side == Side::PreLie) {
        if (k < 0)
            throw Error(ErrorKind::IndexOutOfRange, "pre-Lie triple cochains start in degree 0");
        const auto wl = static_cast<std::size_t>(k);
        b.g = prelie_dim(wl, d, d, size_limit);
        b.h = prelie_dim(wl, e, e, size_limit);
        b.mixed = k == 0 ? 0 : prelie_dim(wl - 1, d, e, size_limit);
    } else {
        if (k < -1)
            throw Error(ErrorKind::IndexOutOfRange, "CE triple cochains start in degree -1");
        const auto up = static_cast<std::size_t>(k + 1);
        b.g = ce_dim(up, d, d * d, size_limit);
        b.h = ce_dim(up, e, e * e, size_limit);
        b.mixed = k == -1 ? 0 : ce_dim(static_cast<std::size_t>(k), d, d * e, size_limit);
    }
    if (b.total() > size_limit)
        throw Error(ErrorKind::SizeLimit, "triple cochain space larger than " + std::to_string(size_limit));
    return b;
}

Mat post_compose_matrix(std::size_t wedge_len, const Mat& phi)
{
    const std::size_t d = phi.cols();
    const std::size_t e = phi.rows();
    const std::size_t slots = binomial(d, wedge_len) * d;
    Mat P(slots * e, slots * d);
    for (std::size_t s = 0; s < slots; ++s)
        P.set_block(s * e, s * d, phi);
    return P;
}

Mat pre_compose_matrix(std::size_t wedge_len, const Mat& phi)
{
    const std::size_t d = phi.cols();
    const std::size_t e = phi.rows();
    const Subsets g_wedge(d, wedge_len);
    const Subsets h_wedge(e, wedge_len);
    Mat Q(g_wedge.count() * d * e, h_wedge.count() * e * e);

    std::vector<std::size_t> a(wedge_len);
    for (std::size_t rx = 0; rx < g_wedge.count(); ++rx) {
        const auto& x = g_wedge[rx];
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = (rx * d + j) * e;
            // Expand phi(x_1), ..., phi(x_wedge) over the h basis.
            std::function<void(std::size_t, Scalar)> rec = [&](std::size_t slot, Scalar weight) {
                if (slot == wedge_len) {
                    std::vector<std::size_t> sorted = a;
                    const int s = sort_with_sign(sorted);
                    if (s == 0)
                        return;
                    const std::size_t ra = h_wedge.rank_of(sorted);
                    for (std::size_t b = 0; b < e; ++b) {
                        if (phi(b, j) == 0)
                            continue;
                        const Scalar w = s * weight * phi(b, j);
                        for (std::size_t v = 0; v < e; ++v)
                            Q(row + v, (ra * e + b) * e + v) += w;
                    }
                    return;
                }
                for (std::size_t i = 0; i < e; ++i)
                    if (phi(i, x[slot]) != 0) {
                        a[slot] = i;
                        rec(slot + 1, weight * phi(i, x[slot]));
                    }
            };
            rec(0, Scalar(1));
        }
    }
    return Q;
}

Mat delta_prelie_matrix(const MorphismTriple& t, int k, std::size_t size_limit)
{
    const TripleBlocks src = triple_blocks(t, k, Side::PreLie, size_limit);
    const TripleBlocks dst = triple_blocks(t, k + 1, Side::PreLie, size_limit);
    const auto wl = static_cast<std::size_t>(k);
    const int s = sign_pow(k);

    Mat D(dst.total(), src.total());
    D.set_block(0, 0, prelie_d_matrix(wl + 1, regular_rep(t.g()), size_limit));
    D.set_block(dst.g, src.g, prelie_d_matrix(wl + 1, regular_rep(t.h()), size_limit));
    const std::size_t mrow = dst.g + dst.h;
    D.set_block(mrow, 0, Scalar(s) * post_compose_matrix(wl, t.phi()));
    D.set_block(mrow, src.g, Scalar(-s) * pre_compose_matrix(wl, t.phi()));
    if (k >= 1)
        D.set_block(mrow, src.g + src.h, prelie_d_matrix(wl, morphism_rep(t), size_limit));
    return D;
}

Mat delta_ce_matrix(const MorphismTriple& t, int k, std::size_t size_limit)
{
    const TripleBlocks src = triple_blocks(t, k, Side::CE, size_limit);
    const TripleBlocks dst = triple_blocks(t, k + 1, Side::CE, size_limit);
    const auto up = static_cast<std::size_t>(k + 1);
    const int s = sign_pow(k < 0 ? -k : k);

    Mat D(dst.total(), src.total());
    D.set_block(0, 0, ce_d_matrix(up, hom_space_rep(t.g(), regular_rep(t.g())), size_limit));
    D.set_block(dst.g, src.g, ce_d_matrix(up, hom_space_rep(t.h(), regular_rep(t.h())), size_limit));
    const std::size_t mrow = dst.g + dst.h;
    D.set_block(mrow, 0, Scalar(s) * post_compose_matrix(up, t.phi()));
    D.set_block(mrow, src.g, Scalar(-s) * pre_compose_matrix(up, t.phi()));
    if (k >= 0)
        D.set_block(mrow, src.g + src.h,
                    ce_d_matrix(static_cast<std::size_t>(k), hom_space_rep(t.g(), morphism_rep(t)), size_limit));
    return D;
}

Mat delta_matrix(const MorphismTriple& t, int k, Side side, std::size_t size_limit)
{
    return side == Side::PreLie ? delta_prelie_matrix(t, k, size_limit) : delta_ce_matrix(t, k, size_limit);
}

Mat phi_matrix(const MorphismTriple& t, int k, std::size_t size_limit)
{
    const TripleBlocks ce = triple_blocks(t, k, Side::CE, size_limit);
    const TripleBlocks pl = triple_blocks(t, k + 1, Side::PreLie, size_limit);
    if (ce.g != pl.g || ce.h != pl.h || ce.mixed != pl.mixed)
        throw Error(ErrorKind::ShapeMismatch, "CE and pre-Lie block dimensions disagree");
    Mat P = Mat::identity(ce.total());
    for (std::size_t i = ce.g + ce.h; i < ce.total(); ++i)
        P(i, i) = -1;
    return P;
}

TripleCohomology triple_cohomology(const MorphismTriple& t, int k, Side side, std::size_t size_limit)
{
    const int lowest = side == Side::PreLie ? 0 : -1;
    if (k < lowest)
        throw Error(ErrorKind::IndexOutOfRange, "degree below the start of the complex");
    TripleCohomology out;
    out.degree = k;
    out.side = side;
    out.dim_cochains = triple_blocks(t, k, side, size_limit).total();
    const Mat high = delta_matrix(t, k, side, size_limit);
    const Mat low = k == lowest ? Mat(out.dim_cochains, 0) : delta_matrix(t, k - 1, side, size_limit);
    out.rank_delta = rank(high);
    out.cohomology = cohomology(low, high, out.dim_cochains);
    return out;
}

Verdict verify_cochain_map(const MorphismTriple& t, int k_max, std::size_t size_limit)
{
    for (int k = -1; k <= k_max; ++k) {
        const Mat phi_k = phi_matrix(t, k, size_limit);
        if (rank(phi_k) != phi_k.rows())
            return Verdict::fail("Phi not invertible", {static_cast<std::size_t>(k + 1)});
        const Mat lhs = phi_matrix(t, k + 1, size_limit) * delta_ce_matrix(t, k, size_limit);
        const Mat rhs = delta_prelie_matrix(t, k + 1, size_limit) * phi_k;
        const Mat diff = lhs - rhs;
        if (!diff.is_zero())
            return Verdict::fail("Phi o delta_CE != delta_preLie o Phi", {static_cast<std::size_t>(k + 1)},
                                 diff.data());
    }
    return Verdict::ok();
}

}  // namespace prelie
