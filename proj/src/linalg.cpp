#include "prelie/linalg.hpp"

#include "prelie/error.hpp"

#include <utility>

namespace prelie {

namespace {

using IntRow = std::vector<Integer>;

// Scales each row by the lcm of its denominators; row scaling preserves the
// row space, so rank and echelon structure are unchanged.
std::vector<IntRow> clear_denominators(const Mat& m)
{
    std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return rows;
}

// Bareiss elimination to row echelon form. Every division by the previous
// pivot is exact; pivot columns are recorded in order.
std::vector<std::size_t> bareiss_echelon(std::vector<IntRow>& a, std::size_t cols)
{
    const std::size_t n_rows = a.size();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n_rows; ++c) {
        std::size_t p = r;
        while (p < n_rows && a[p][c] == 0)
            ++p;
        if (p == n_rows)
            continue;
        std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < n_rows; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        // Rows below the pivot in skipped columns were already zero, so the
        // determinant-minor structure (and exactness) is preserved.
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

}  // namespace

Echelon rref(const Mat& m)
{
    auto ints = clear_denominators(m);
    auto pivots = bareiss_echelon(ints, m.cols());
    const std::size_t r = pivots.size();

    Mat red(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& piv = ints[i][pivots[i]];
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (ints[i][c] != 0) {
                red(i, c) = Scalar(ints[i][c], piv);
                red(i, c).canonicalize();
            }
    }
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Scalar f = red(k, pc);
            if (f == 0)
                continue;
            for (std::size_t c = pc; c < m.cols(); ++c)
                if (red(i, c) != 0)
                    red(k, c) -= f * red(i, c);
        }
    }
    return {std::move(red), std::move(pivots)};
}

std::size_t rank(const Mat& m)
{
    auto ints = clear_denominators(m);
    return bareiss_echelon(ints, m.cols()).size();
}

std::vector<Vec> nullspace_basis(const Mat& m)
{
    const auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat invert(const Mat& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Mat::identity(n));
    const auto [red, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorKind::SingularMatrix, "rank < " + std::to_string(n));
    return red.block(0, n, n, n);
}

std::optional<Vec> solve(const Mat& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
    Mat aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t r = 0; r < m.rows(); ++r)
        aug(r, m.cols()) = b[r];
    const auto [red, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = red(i, m.cols());
    return x;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient_dim)
{
    if (is_zero(v))
        return true;
    const Mat a = Mat::from_columns(ambient_dim, basis);
    return solve(a, v).has_value();
}

std::vector<Vec> quotient_complement(const std::vector<Vec>& kernel, const std::vector<Vec>& image,
                                     std::size_t ambient_dim)
{
    const Mat k = Mat::from_columns(ambient_dim, kernel);
    const std::size_t rank_k = rank(k);
    {
        std::vector<Vec> both = kernel;
        both.insert(both.end(), image.begin(), image.end());
        if (rank(Mat::from_columns(ambient_dim, both)) != rank_k)
            throw Error(ErrorKind::ImageNotInKernel, "image vector outside span(kernel)");
    }

    // Echelon rows of span(image); reduce kernel vectors against them.
    const Mat im_rows = Mat::from_columns(ambient_dim, image).transpose();
    const auto [red, pivots] = rref(im_rows);

    std::vector<Vec> chosen;
    std::vector<Vec> span;
    for (std::size_t i = 0; i < red.rows(); ++i)
        span.push_back(red.row(i));
    std::size_t current = span.size();

    for (const auto& kv : kernel) {
        Vec v = kv;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (v[pivots[i]] != 0)
                axpy(v, -Scalar(v[pivots[i]]), span[i]);
        if (is_zero(v))
            continue;
        std::vector<Vec> trial = span;
        trial.push_back(v);
        const std::size_t r = rank(Mat::from_columns(ambient_dim, trial));
        if (r > current) {
            span = std::move(trial);
            current = r;
            chosen.push_back(std::move(v));
        }
    }
    return chosen;
}

}  // namespace prelie
