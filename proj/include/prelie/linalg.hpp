#ifndef PRELIE_LINALG_HPP
#define PRELIE_LINALG_HPP

#include "prelie/matrix.hpp"

#include <optional>
#include <vector>

namespace prelie {

struct Echelon {
    Mat reduced;                       // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row of `reduced`
};

/// Fraction-free (Bareiss) forward elimination followed by rational
/// back-substitution. Rows are first cleared of denominators, so the
/// elimination itself runs entirely over the integers.
Echelon rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Exactly cols - rank(m) independent vectors spanning ker(m).
std::vector<Vec> nullspace_basis(const Mat& m);

/// Throws NonSquare or SingularMatrix.
Mat invert(const Mat& m);

/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Vectors extending a basis of span(image) to a basis of span(kernel).
/// Each returned vector is a kernel vector with its coordinates at the
/// pivot positions of the image's echelon form cleared. Throws
/// ImageNotInKernel when some image vector is outside span(kernel).
std::vector<Vec> quotient_complement(const std::vector<Vec>& kernel, const std::vector<Vec>& image,
                                     std::size_t ambient_dim);

/// True iff v lies in the span of `basis`.
bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient_dim);

}  // namespace prelie

#endif
