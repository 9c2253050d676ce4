#ifndef PRELIE_ALGEBRA_HPP
#define PRELIE_ALGEBRA_HPP

#include "prelie/matrix.hpp"

#include <string>
#include <vector>

namespace prelie {

/// Bilinear map on a d-dimensional space given by structure constants,
/// indexed [left][right][output]: e_i * e_j = sum_k at(i, j, k) e_k.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

    std::size_t dim() const { return dim_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * dim_ + j) * dim_ + k]; }

    Vec basis_product(std::size_t i, std::size_t j) const;
    void set_basis_product(std::size_t i, std::size_t j, const Vec& out);
    Vec apply(const Vec& x, const Vec& y) const;

    /// Coordinates as a degree-2 pre-Lie cochain: index (i*d + j)*d + k.
    const std::vector<Scalar>& coords() const { return data_; }
    static StructureTensor from_coords(std::size_t dim, const Vec& coords);

    bool is_zero() const;
    StructureTensor commutator() const;

    StructureTensor& operator+=(const StructureTensor& o);
    StructureTensor& operator-=(const StructureTensor& o);
    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> data_;
};

StructureTensor operator+(StructureTensor a, const StructureTensor& b);
StructureTensor operator-(StructureTensor a, const StructureTensor& b);
StructureTensor operator*(const Scalar& s, StructureTensor t);

/// Pass/fail with the first offending basis tuple (0-based) and the nonzero
/// difference of the two sides of the identity.
struct Verdict {
    bool pass = true;
    std::string reason;
    std::vector<std::size_t> at;
    Vec difference;

    static Verdict ok() { return {}; }
    static Verdict fail(std::string reason, std::vector<std::size_t> at, Vec difference = {})
    {
        return {false, std::move(reason), std::move(at), std::move(difference)};
    }
    explicit operator bool() const { return pass; }
};

enum class Flavor { PreLie, Lie, CommAssoc, Unchecked };

std::string flavor_name(Flavor f);

/// Finite-dimensional algebra on a named basis. Constructing with a flavor
/// other than Unchecked verifies the defining identities and throws
/// NotPreLie / NotLie / NotCommAssoc on failure.
class Algebra {
public:
    Algebra() = default;
    Algebra(StructureTensor product, Flavor flavor, std::vector<std::string> basis = {});

    static Algebra abelian(std::size_t dim, Flavor flavor = Flavor::PreLie);

    std::size_t dim() const { return product_.dim(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const StructureTensor& product() const { return product_; }
    Flavor flavor() const { return flavor_; }

    Vec mul(const Vec& x, const Vec& y) const { return product_.apply(x, y); }
    Vec basis_product(std::size_t i, std::size_t j) const { return product_.basis_product(i, j); }

    friend bool operator==(const Algebra& a, const Algebra& b)
    {
        return a.product_ == b.product_ && a.flavor_ == b.flavor_;
    }

private:
    StructureTensor product_;
    Flavor flavor_ = Flavor::Unchecked;
    std::vector<std::string> basis_;
};

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix = "e");

Verdict check_pre_lie(const StructureTensor& t);
Verdict check_pre_lie(const Algebra& a);
/// Fails with reason "Antisymmetry" before testing Jacobi if the bracket is
/// not antisymmetric.
Verdict check_jacobi(const StructureTensor& t);
Verdict check_jacobi(const Algebra& a);
Verdict check_comm_assoc(const StructureTensor& t);

/// Commutator algebra; throws NotPreLie unless the input passes check_pre_lie.
Algebra sub_adjacent(const Algebra& a);

/// Matrix of y -> e_i * y.
Mat left_mul(const Algebra& a, std::size_t i);
/// Matrix of y -> y * e_i.
Mat right_mul(const Algebra& a, std::size_t i);
/// Matrices of y -> x * y and y -> y * x for an arbitrary vector x.
Mat left_mul(const Algebra& a, const Vec& x);
Mat right_mul(const Algebra& a, const Vec& x);

/// phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs. Throws FlavorMismatch
/// when the flavors differ and ShapeMismatch on a wrongly shaped matrix.
Verdict check_homomorphism(const Algebra& source, const Algebra& target, const Mat& phi);
/// Same identity with no flavor bookkeeping.
Verdict check_homomorphism(const StructureTensor& source, const StructureTensor& target, const Mat& phi);

/// Two pre-Lie algebras with a verified homomorphism g -> h.
class MorphismTriple {
public:
    /// Throws NotPreLie or NotHomomorphism.
    MorphismTriple(Algebra g, Algebra h, Mat phi);

    const Algebra& g() const { return g_; }
    const Algebra& h() const { return h_; }
    const Mat& phi() const { return phi_; }

    friend bool operator==(const MorphismTriple&, const MorphismTriple&) = default;

private:
    Algebra g_;
    Algebra h_;
    Mat phi_;
};

}  // namespace prelie

#endif
