#include "prelie/matrix.hpp"

#include "prelie/error.hpp"

#include <algorithm>

namespace prelie {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& cols)
{
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw Error(ErrorKind::ShapeMismatch, "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Mat Mat::diagonal_blocks(const std::vector<Mat>& blocks)
{
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Mat m(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Vec Mat::row(std::size_t r) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Mat::columns() const
{
    std::vector<Vec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(col(c));
    return out;
}

Mat Mat::transpose() const
{
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Mat::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

bool Mat::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

bool Mat::is_antisymmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r))
                return false;
    return true;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& block)
{
    if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block does not fit");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c)
            (*this)(r0 + r, c0 + c) = block(r, c);
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const
{
    if (r0 + rows > rows_ || c0 + cols > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Mat b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

Mat& Mat::operator+=(const Mat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Mat& Mat::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator*(const Scalar& s, Mat m) { return m *= s; }

Mat operator*(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec operator*(const Mat& a, const Vec& v)
{
    if (a.cols() != v.size())
        throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
    Vec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && v[k] != 0)
                r[i] += a(i, k) * v[k];
    return r;
}

Mat hconcat(const std::vector<Mat>& blocks, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw Error(ErrorKind::ShapeMismatch, "hconcat row mismatch");
        cols += b.cols();
    }
    Mat m(rows, cols);
    cols = 0;
    for (const auto& b : blocks) {
        m.set_block(0, cols, b);
        cols += b.cols();
    }
    return m;
}

}  // namespace prelie
