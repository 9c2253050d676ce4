#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using prelie::StructureTensor;

std::size_t naive_rank(const Mat& m)
{
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const Scalar f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool naive_is_prelie(const StructureTensor& t)
{
    const std::size_t d = t.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                for (std::size_t out = 0; out < d; ++out) {
                    // ((x y) z - x (y z)) - ((y x) z - y (x z)) at coordinate `out`.
                    Scalar s;
                    for (std::size_t k = 0; k < d; ++k) {
                        s += t.at(x, y, k) * t.at(k, z, out);
                        s -= t.at(y, z, k) * t.at(x, k, out);
                        s -= t.at(y, x, k) * t.at(k, z, out);
                        s += t.at(x, z, k) * t.at(y, k, out);
                    }
                    if (s != 0)
                        return false;
                }
    return true;
}

std::vector<std::vector<std::size_t>> naive_subsets(std::size_t d, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < d; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int inversion_sign(const std::vector<std::size_t>& idx)
{
    int inversions = 0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            if (idx[a] == idx[b])
                return 0;
            if (idx[a] > idx[b])
                ++inversions;
        }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

using BasisFn = std::function<Vec(const std::vector<std::size_t>&)>;

/// Multilinear extension of a function given on basis tuples.
Vec eval_multilinear(const BasisFn& f, const std::vector<Vec>& args, std::size_t out_dim)
{
    Vec acc(out_dim);
    std::vector<std::size_t> idx(args.size());
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t slot, Scalar w) {
        if (slot == args.size()) {
            const Vec v = f(idx);
            for (std::size_t k = 0; k < out_dim; ++k)
                acc[k] += w * v[k];
            return;
        }
        for (std::size_t i = 0; i < args[slot].size(); ++i)
            if (args[slot][i] != 0) {
                idx[slot] = i;
                rec(slot + 1, w * args[slot][i]);
            }
    };
    rec(0, Scalar(1));
    return acc;
}

Vec unit(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

Vec basis_product(const StructureTensor& t, std::size_t a, std::size_t b)
{
    Vec v(t.dim());
    for (std::size_t k = 0; k < t.dim(); ++k)
        v[k] = t.at(a, b, k);
    return v;
}

Vec basis_commutator(const StructureTensor& t, std::size_t a, std::size_t b)
{
    Vec v(t.dim());
    for (std::size_t k = 0; k < t.dim(); ++k)
        v[k] = t.at(a, b, k) - t.at(b, a, k);
    return v;
}

Vec mat_vec(const Mat& m, const Vec& v)
{
    Vec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += m(r, c) * v[c];
    return out;
}

void add_scaled(Vec& acc, int sign, const Vec& v)
{
    for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] += sign * v[k];
}

int alt(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Mat naive_prelie_d(std::size_t n, const prelie::Representation& rep)
{
    const std::size_t d = rep.algebra.dim();
    const std::size_t m = rep.space_dim;
    const StructureTensor& prod = rep.algebra.product();
    const auto src = naive_subsets(d, n - 1);
    const auto dst = naive_subsets(d, n);
    Mat D(dst.size() * d * m, src.size() * d * m);

    for (std::size_t r = 0; r < src.size(); ++r)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t v = 0; v < m; ++v) {
                const std::size_t col = (r * d + j) * m + v;
                const BasisFn f = [&](const std::vector<std::size_t>& t) {
                    Vec out(m);
                    std::vector<std::size_t> head(t.begin(), t.end() - 1);
                    const int s = inversion_sign(head);
                    if (s == 0 || t.back() != j)
                        return out;
                    std::sort(head.begin(), head.end());
                    if (head == src[r])
                        out[v] = s;
                    return out;
                };
                for (std::size_t rx = 0; rx < dst.size(); ++rx)
                    for (std::size_t last = 0; last < d; ++last) {
                        // Arguments x_1..x_{n+1} (0-based slots 0..n).
                        std::vector<std::size_t> x = dst[rx];
                        x.push_back(last);
                        std::vector<Vec> X;
                        for (auto i : x)
                            X.push_back(unit(d, i));
                        Vec val(m);
                        for (std::size_t i = 0; i < n; ++i) {
                            const int s = alt(i);
                            std::vector<Vec> drop;
                            for (std::size_t p = 0; p <= n; ++p)
                                if (p != i)
                                    drop.push_back(X[p]);
                            add_scaled(val, s, mat_vec(rep.rho[x[i]], eval_multilinear(f, drop, m)));

                            std::vector<Vec> moved;
                            for (std::size_t p = 0; p < n; ++p)
                                if (p != i)
                                    moved.push_back(X[p]);
                            moved.push_back(X[i]);
                            add_scaled(val, s, mat_vec(rep.mu[x[n]], eval_multilinear(f, moved, m)));

                            moved.back() = basis_product(prod, x[i], x[n]);
                            add_scaled(val, -s, eval_multilinear(f, moved, m));
                        }
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t k = i + 1; k < n; ++k) {
                                std::vector<Vec> args{basis_commutator(prod, x[i], x[k])};
                                for (std::size_t p = 0; p <= n; ++p)
                                    if (p != i && p != k)
                                        args.push_back(X[p]);
                                // (-1)^{i+j} with 1-based positions equals alt(i + k).
                                add_scaled(val, alt(i + k), eval_multilinear(f, args, m));
                            }
                        for (std::size_t w = 0; w < m; ++w)
                            D((rx * d + last) * m + w, col) = val[w];
                    }
            }
    return D;
}

Mat naive_ce_d(std::size_t n, const prelie::LieRepresentation& rep)
{
    const std::size_t d = rep.algebra.dim();
    const std::size_t w = rep.space_dim;
    const StructureTensor& br = rep.algebra.product();
    const auto src = naive_subsets(d, n);
    const auto dst = naive_subsets(d, n + 1);
    Mat D(dst.size() * w, src.size() * w);

    for (std::size_t r = 0; r < src.size(); ++r)
        for (std::size_t v = 0; v < w; ++v) {
            const BasisFn f = [&](const std::vector<std::size_t>& t) {
                Vec out(w);
                const int s = inversion_sign(t);
                if (s == 0)
                    return out;
                std::vector<std::size_t> sorted = t;
                std::sort(sorted.begin(), sorted.end());
                if (sorted == src[r])
                    out[v] = s;
                return out;
            };
            for (std::size_t rx = 0; rx < dst.size(); ++rx) {
                const auto& x = dst[rx];
                std::vector<Vec> X;
                for (auto i : x)
                    X.push_back(unit(d, i));
                Vec val(w);
                for (std::size_t i = 0; i <= n; ++i) {
                    std::vector<Vec> drop;
                    for (std::size_t p = 0; p <= n; ++p)
                        if (p != i)
                            drop.push_back(X[p]);
                    add_scaled(val, alt(i), mat_vec(rep.rho[x[i]], eval_multilinear(f, drop, w)));
                }
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t k = i + 1; k <= n; ++k) {
                        std::vector<Vec> args{basis_product(br, x[i], x[k])};
                        for (std::size_t p = 0; p <= n; ++p)
                            if (p != i && p != k)
                                args.push_back(X[p]);
                        add_scaled(val, alt(i + k), eval_multilinear(f, args, w));
                    }
                for (std::size_t u = 0; u < w; ++u)
                    D(rx * w + u, r * w + v) = val[u];
            }
        }
    return D;
}

Mat naive_hom_action(const prelie::Representation& rep, std::size_t x)
{
    const std::size_t d = rep.algebra.dim();
    const std::size_t m = rep.space_dim;
    const StructureTensor& prod = rep.algebra.product();
    Mat act(d * m, d * m);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t v = 0; v < m; ++v) {
            // f = the map sending e_j to e_v.
            auto f = [&](const Vec& y) {
                Vec out(m);
                out[v] = y[j];
                return out;
            };
            for (std::size_t y = 0; y < d; ++y) {
                Vec val = mat_vec(rep.rho[x], f(unit(d, y)));
                add_scaled(val, 1, mat_vec(rep.mu[y], f(unit(d, x))));
                add_scaled(val, -1, f(basis_product(prod, x, y)));
                for (std::size_t u = 0; u < m; ++u)
                    act(y * m + u, j * m + v) = val[u];
            }
        }
    return act;
}

Vec naive_solve(const Mat& a, const Vec& b)
{
    const std::size_t n = a.rows();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = a(r, c);
        m[r][n] = b[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw std::runtime_error("naive_solve: singular");
        std::swap(m[p], m[c]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && m[r][c] != 0) {
                const Scalar f = m[r][c] / m[c][c];
                for (std::size_t k = c; k <= n; ++k)
                    m[r][k] -= f * m[c][k];
            }
    }
    Vec x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[r] = m[r][n] / m[r][r];
    return x;
}

}  // namespace oracle
