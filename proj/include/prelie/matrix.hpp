#ifndef PRELIE_MATRIX_HPP
#define PRELIE_MATRIX_HPP

#include "prelie/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace prelie {

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Integer literal rows, e.g. Mat{{1, 2}, {2, 4}}.
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat from_columns(std::size_t rows, const std::vector<Vec>& cols);
    static Mat diagonal_blocks(const std::vector<Mat>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    std::vector<Vec> columns() const;

    Mat transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Mat& block);
    Mat block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Scalar& s);

    friend bool operator==(const Mat& a, const Mat& b) = default;

    const std::vector<Scalar>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(const Scalar& s, Mat m);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);

/// Horizontal concatenation; all blocks must share the row count.
Mat hconcat(const std::vector<Mat>& blocks, std::size_t rows);

}  // namespace prelie

#endif
