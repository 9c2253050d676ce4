#include "prelie/cochain.hpp"

#include "prelie/error.hpp"
#include "prelie/linalg.hpp"

#include <functional>
#include <limits>

namespace prelie {

namespace {

std::uint64_t mask_of(const std::vector<std::size_t>& idx)
{
    std::uint64_t m = 0;
    for (auto i : idx)
        m |= std::uint64_t{1} << i;
    return m;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& xs, std::size_t skip)
{
    std::vector<std::size_t> out;
    out.reserve(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p)
        if (p != skip)
            out.push_back(xs[p]);
    return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& xs, std::size_t skip_a, std::size_t skip_b)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < xs.size(); ++p)
        if (p != skip_a && p != skip_b)
            out.push_back(xs[p]);
    return out;
}

int parity_sign(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

void check_size(std::size_t d, std::size_t k, std::size_t per_subset, std::size_t limit)
{
    const std::size_t b = binomial(d, k);
    const bool overflow = per_subset != 0 && b > std::numeric_limits<std::size_t>::max() / per_subset;
    if (overflow || b * per_subset > limit)
        throw Error(ErrorKind::SizeLimit, "cochain space larger than " + std::to_string(limit));
}

std::string subset_label(const std::vector<std::size_t>& s)
{
    std::string out;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (p)
            out += "^";
        out += "e" + std::to_string(s[p] + 1);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (r > std::numeric_limits<std::size_t>::max() / (n - k + i))
            return std::numeric_limits<std::size_t>::max();
        r = r * (n - k + i) / i;
    }
    return r;
}

Subsets::Subsets(std::size_t d, std::size_t k) : d_(d), k_(k)
{
    if (d > 64)
        throw Error(ErrorKind::SizeLimit, "algebra dimension above 64");
    if (k > d)
        return;
    std::vector<std::size_t> cur(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            rank_.emplace(mask_of(cur), subsets_.size());
            subsets_.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= d; ++i) {
            cur[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

std::size_t Subsets::rank_of(const std::vector<std::size_t>& sorted) const
{
    auto it = rank_.find(mask_of(sorted));
    if (sorted.size() != k_ || it == rank_.end())
        throw Error(ErrorKind::IndexOutOfRange, "not a " + std::to_string(k_) + "-subset");
    return it->second;
}

int sort_with_sign(std::vector<std::size_t>& idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

PreLieCochainSpace::PreLieCochainSpace(std::size_t degree, std::size_t algebra_dim, std::size_t space_dim,
                                       std::size_t size_limit)
    : degree_(degree), d_(algebra_dim), m_(space_dim),
      wedge_((check_size(algebra_dim, degree == 0 ? 0 : degree - 1, algebra_dim * space_dim, size_limit),
              Subsets(algebra_dim, degree == 0 ? 0 : degree - 1)))
{
    if (degree == 0)
        throw Error(ErrorKind::IndexOutOfRange, "pre-Lie cochains start in degree 1");
}

std::vector<std::string> PreLieCochainSpace::basis_labels() const
{
    std::vector<std::string> out;
    for (std::size_t r = 0; r < wedge_.count(); ++r)
        for (std::size_t j = 0; j < d_; ++j)
            for (std::size_t v = 0; v < m_; ++v)
                out.push_back("(" + subset_label(wedge_[r]) + ", e" + std::to_string(j + 1) + ", v" +
                              std::to_string(v + 1) + ")");
    return out;
}

CECochainSpace::CECochainSpace(std::size_t degree, std::size_t algebra_dim, std::size_t space_dim,
                               std::size_t size_limit)
    : degree_(degree), d_(algebra_dim), w_(space_dim),
      wedge_((check_size(algebra_dim, degree, space_dim, size_limit), Subsets(algebra_dim, degree)))
{
}

std::vector<std::string> CECochainSpace::basis_labels() const
{
    std::vector<std::string> out;
    for (std::size_t r = 0; r < wedge_.count(); ++r)
        for (std::size_t v = 0; v < w_; ++v)
            out.push_back("(" + subset_label(wedge_[r]) + ", w" + std::to_string(v + 1) + ")");
    return out;
}

Vec evaluate(const Cochain& f, const std::vector<Vec>& args)
{
    if (args.size() != f.degree)
        throw Error(ErrorKind::ArityMismatch,
                    "expected " + std::to_string(f.degree) + " arguments, got " + std::to_string(args.size()));
    const std::size_t d = f.algebra_dim;
    const std::size_t m = f.space_dim;
    for (const auto& a : args)
        if (a.size() != d)
            throw Error(ErrorKind::ShapeMismatch, "argument length differs from algebra dimension");

    const bool prelie = f.kind == CochainKind::PreLie;
    if (prelie && f.degree == 0)
        throw Error(ErrorKind::ArityMismatch, "pre-Lie cochains start in degree 1");
    const std::size_t wedge_len = prelie ? f.degree - 1 : f.degree;
    const Subsets wedge(d, wedge_len);
    if (f.coords.size() != wedge.count() * (prelie ? d : 1) * m)
        throw Error(ErrorKind::ShapeMismatch, "cochain coordinate count");

    Vec out(m);
    std::vector<std::size_t> idx(args.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t slot, Scalar weight) {
        if (slot == args.size()) {
            std::vector<std::size_t> w(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(wedge_len));
            const int sign = sort_with_sign(w);
            if (sign == 0)
                return;
            const std::size_t r = wedge.rank_of(w);
            const std::size_t base = prelie ? (r * d + idx.back()) * m : r * m;
            for (std::size_t v = 0; v < m; ++v)
                if (f.coords[base + v] != 0)
                    out[v] += sign * weight * f.coords[base + v];
            return;
        }
        for (std::size_t i = 0; i < d; ++i)
            if (args[slot][i] != 0) {
                idx[slot] = i;
                rec(slot + 1, weight * args[slot][i]);
            }
    };
    rec(0, Scalar(1));
    return out;
}

Mat prelie_d_matrix(std::size_t n, const Representation& rep, std::size_t size_limit)
{
    if (n == 0)
        throw Error(ErrorKind::IndexOutOfRange, "pre-Lie differential starts in degree 1");
    const std::size_t d = rep.algebra.dim();
    const std::size_t m = rep.space_dim;
    const PreLieCochainSpace src(n, d, m, size_limit);
    const PreLieCochainSpace dst(n + 1, d, m, size_limit);
    const StructureTensor& prod = rep.algebra.product();
    const StructureTensor bracket = prod.commutator();

    Mat D(dst.dim(), src.dim());
    for (std::size_t rx = 0; rx < dst.wedge().count(); ++rx) {
        const auto& x = dst.wedge()[rx];  // x_1 < ... < x_n
        for (std::size_t last = 0; last < d; ++last) {  // x_{n+1}
            const std::size_t row = dst.index(rx, last, 0);
            for (std::size_t i = 0; i < n; ++i) {
                const int s = parity_sign(i);  // (-1)^{i+1} with 1-based i
                const std::size_t rr = src.wedge().rank_of(without(x, i));
                for (std::size_t v = 0; v < m; ++v)
                    for (std::size_t w = 0; w < m; ++w) {
                        // rho(x_i) f(..., ^x_i, ..., x_{n+1})
                        if (rep.rho[x[i]](w, v) != 0)
                            D(row + w, src.index(rr, last, v)) += s * rep.rho[x[i]](w, v);
                        // mu(x_{n+1}) f(..., ^x_i, ..., x_n, x_i)
                        if (rep.mu[last](w, v) != 0)
                            D(row + w, src.index(rr, x[i], v)) += s * rep.mu[last](w, v);
                    }
                // - f(..., ^x_i, ..., x_n, x_i . x_{n+1})
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& c = prod.at(x[i], last, k);
                    if (c == 0)
                        continue;
                    for (std::size_t v = 0; v < m; ++v)
                        D(row + v, src.index(rr, k, v)) -= s * c;
                }
            }
            // f([x_i, x_j], x_1, ..., ^x_i, ..., ^x_j, ..., x_{n+1})
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const int s = parity_sign(i + j);
                    const auto rest = without(x, i, j);
                    for (std::size_t k = 0; k < d; ++k) {
                        const Scalar& b = bracket.at(x[i], x[j], k);
                        if (b == 0)
                            continue;
                        std::vector<std::size_t> w{k};
                        w.insert(w.end(), rest.begin(), rest.end());
                        const int sw = sort_with_sign(w);
                        if (sw == 0)
                            continue;
                        const std::size_t rk = src.wedge().rank_of(w);
                        for (std::size_t v = 0; v < m; ++v)
                            D(row + v, src.index(rk, last, v)) += s * sw * b;
                    }
                }
        }
    }
    return D;
}

Mat ce_d_matrix(std::size_t n, const LieRepresentation& rep, std::size_t size_limit)
{
    const std::size_t d = rep.algebra.dim();
    const std::size_t wdim = rep.space_dim;
    const CECochainSpace src(n, d, wdim, size_limit);
    const CECochainSpace dst(n + 1, d, wdim, size_limit);
    const StructureTensor& bracket = rep.algebra.product();

    Mat D(dst.dim(), src.dim());
    for (std::size_t rx = 0; rx < dst.wedge().count(); ++rx) {
        const auto& x = dst.wedge()[rx];  // x_1 < ... < x_{n+1}
        const std::size_t row = dst.index(rx, 0);
        for (std::size_t i = 0; i <= n; ++i) {
            const int s = parity_sign(i);
            const std::size_t rr = src.wedge().rank_of(without(x, i));
            const Mat& act = rep.rho[x[i]];
            for (std::size_t v = 0; v < wdim; ++v)
                for (std::size_t u = 0; u < wdim; ++u)
                    if (act(u, v) != 0)
                        D(row + u, src.index(rr, v)) += s * act(u, v);
        }
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const int s = parity_sign(i + j);
                const auto rest = without(x, i, j);
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar& b = bracket.at(x[i], x[j], k);
                    if (b == 0)
                        continue;
                    std::vector<std::size_t> w{k};
                    w.insert(w.end(), rest.begin(), rest.end());
                    const int sw = sort_with_sign(w);
                    if (sw == 0)
                        continue;
                    const std::size_t rk = src.wedge().rank_of(w);
                    for (std::size_t v = 0; v < wdim; ++v)
                        D(row + v, src.index(rk, v)) += s * sw * b;
                }
            }
    }
    return D;
}

CohomologyResult cohomology(const Mat& d_low, const Mat& d_high, std::size_t space_dim)
{
    const bool low_empty = d_low.cols() == 0;
    const bool high_empty = d_high.rows() == 0;
    if ((!low_empty && d_low.rows() != space_dim) || (!high_empty && d_high.cols() != space_dim))
        throw Error(ErrorKind::ShapeMismatch, "differentials do not meet at the middle space");
    if (!low_empty && !high_empty && !(d_high * d_low).is_zero())
        throw Error(ErrorKind::NotAComplex, "d_high * d_low != 0");

    CohomologyResult res;
    std::vector<Vec> kernel;
    if (high_empty) {
        for (std::size_t i = 0; i < space_dim; ++i)
            kernel.push_back(unit_vec(space_dim, i));
    } else {
        kernel = nullspace_basis(d_high);
    }
    std::vector<Vec> image = low_empty ? std::vector<Vec>{} : d_low.columns();
    res.kernel_dim = kernel.size();
    res.image_rank = low_empty ? 0 : rank(d_low);
    res.representatives = quotient_complement(kernel, image, space_dim);
    res.dimension = res.kernel_dim - res.image_rank;
    if (res.representatives.size() != res.dimension)
        throw Error(ErrorKind::NotAComplex, "representative count disagrees with nullity - rank");
    return res;
}

}  // namespace prelie
