#include "prelie/algebra.hpp"

#include "prelie/error.hpp"

namespace prelie {

Vec StructureTensor::basis_product(std::size_t i, std::size_t j) const
{
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        v[k] = at(i, j, k);
    return v;
}

void StructureTensor::set_basis_product(std::size_t i, std::size_t j, const Vec& out)
{
    for (std::size_t k = 0; k < dim_; ++k)
        at(i, j, k) = out[k];
}

Vec StructureTensor::apply(const Vec& x, const Vec& y) const
{
    Vec r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0)
                continue;
            const Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (at(i, j, k) != 0)
                    r[k] += w * at(i, j, k);
        }
    }
    return r;
}

StructureTensor StructureTensor::from_coords(std::size_t dim, const Vec& coords)
{
    if (coords.size() != dim * dim * dim)
        throw Error(ErrorKind::ShapeMismatch, "structure tensor coordinate count");
    StructureTensor t(dim);
    t.data_ = coords;
    return t;
}

bool StructureTensor::is_zero() const { return prelie::is_zero(data_); }

StructureTensor StructureTensor::commutator() const
{
    StructureTensor t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                t.at(i, j, k) = at(i, j, k) - at(j, i, k);
    return t;
}

StructureTensor& StructureTensor::operator+=(const StructureTensor& o)
{
    if (dim_ != o.dim_)
        throw Error(ErrorKind::ShapeMismatch, "tensor dimension");
    data_ += o.data_;
    return *this;
}

StructureTensor& StructureTensor::operator-=(const StructureTensor& o)
{
    if (dim_ != o.dim_)
        throw Error(ErrorKind::ShapeMismatch, "tensor dimension");
    data_ -= o.data_;
    return *this;
}

StructureTensor operator+(StructureTensor a, const StructureTensor& b) { return a += b; }
StructureTensor operator-(StructureTensor a, const StructureTensor& b) { return a -= b; }

StructureTensor operator*(const Scalar& s, StructureTensor t)
{
    return StructureTensor::from_coords(t.dim(), s * t.coords());
}

std::string flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::PreLie: return "prelie";
    case Flavor::Lie: return "lie";
    case Flavor::CommAssoc: return "commassoc";
    case Flavor::Unchecked: return "unchecked";
    }
    return "unchecked";
}

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i)
        names.push_back(prefix + std::to_string(i + 1));
    return names;
}

Algebra::Algebra(StructureTensor product, Flavor flavor, std::vector<std::string> basis)
    : product_(std::move(product)), flavor_(flavor), basis_(std::move(basis))
{
    if (basis_.empty())
        basis_ = default_basis_names(product_.dim());
    if (basis_.size() != product_.dim())
        throw Error(ErrorKind::ShapeMismatch, "basis name count differs from dimension");

    Verdict v;
    switch (flavor_) {
    case Flavor::PreLie:
        if (!(v = check_pre_lie(product_)))
            throw Error(ErrorKind::NotPreLie, "associator not symmetric");
        break;
    case Flavor::Lie:
        if (!(v = check_jacobi(product_)))
            throw Error(ErrorKind::NotLie, v.reason);
        break;
    case Flavor::CommAssoc:
        if (!(v = check_comm_assoc(product_)))
            throw Error(ErrorKind::NotCommAssoc, v.reason);
        break;
    case Flavor::Unchecked:
        break;
    }
}

Algebra Algebra::abelian(std::size_t dim, Flavor flavor) { return Algebra(StructureTensor(dim), flavor); }

Verdict check_pre_lie(const StructureTensor& t)
{
    const std::size_t d = t.dim();
    // (x,y,z) = (xy)z - x(yz), compared against (y,x,z).
    auto associator = [&](std::size_t x, std::size_t y, std::size_t z) {
        const Vec xy = t.basis_product(x, y);
        const Vec yz = t.basis_product(y, z);
        return t.apply(xy, unit_vec(d, z)) - t.apply(unit_vec(d, x), yz);
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec diff = associator(i, j, k) - associator(j, i, k);
                if (!is_zero(diff))
                    return Verdict::fail("associator not symmetric", {i, j, k}, std::move(diff));
            }
    return Verdict::ok();
}

Verdict check_pre_lie(const Algebra& a) { return check_pre_lie(a.product()); }

Verdict check_jacobi(const StructureTensor& t)
{
    const std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec s = t.basis_product(i, j) + t.basis_product(j, i);
            if (!is_zero(s))
                return Verdict::fail("Antisymmetry", {i, j}, std::move(s));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                // [[x,y],z] + [[y,z],x] + [[z,x],y]
                Vec s = t.apply(t.basis_product(i, j), unit_vec(d, k));
                s += t.apply(t.basis_product(j, k), unit_vec(d, i));
                s += t.apply(t.basis_product(k, i), unit_vec(d, j));
                if (!is_zero(s))
                    return Verdict::fail("Jacobi", {i, j, k}, std::move(s));
            }
    return Verdict::ok();
}

Verdict check_jacobi(const Algebra& a) { return check_jacobi(a.product()); }

Verdict check_comm_assoc(const StructureTensor& t)
{
    const std::size_t d = t.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec s = t.basis_product(i, j) - t.basis_product(j, i);
            if (!is_zero(s))
                return Verdict::fail("Commutativity", {i, j}, std::move(s));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec s = t.apply(t.basis_product(i, j), unit_vec(d, k)) -
                        t.apply(unit_vec(d, i), t.basis_product(j, k));
                if (!is_zero(s))
                    return Verdict::fail("Associativity", {i, j, k}, std::move(s));
            }
    return Verdict::ok();
}

Algebra sub_adjacent(const Algebra& a)
{
    if (!check_pre_lie(a))
        throw Error(ErrorKind::NotPreLie, "sub-adjacent algebra needs a pre-Lie input");
    return Algebra(a.product().commutator(), Flavor::Lie, a.basis());
}

Mat left_mul(const Algebra& a, std::size_t i)
{
    if (i >= a.dim())
        throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1));
    return left_mul(a, unit_vec(a.dim(), i));
}

Mat right_mul(const Algebra& a, std::size_t i)
{
    if (i >= a.dim())
        throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1));
    return right_mul(a, unit_vec(a.dim(), i));
}

Mat left_mul(const Algebra& a, const Vec& x)
{
    const std::size_t d = a.dim();
    Mat m(d, d);
    for (std::size_t y = 0; y < d; ++y) {
        const Vec col = a.mul(x, unit_vec(d, y));
        for (std::size_t k = 0; k < d; ++k)
            m(k, y) = col[k];
    }
    return m;
}

Mat right_mul(const Algebra& a, const Vec& x)
{
    const std::size_t d = a.dim();
    Mat m(d, d);
    for (std::size_t y = 0; y < d; ++y) {
        const Vec col = a.mul(unit_vec(d, y), x);
        for (std::size_t k = 0; k < d; ++k)
            m(k, y) = col[k];
    }
    return m;
}

Verdict check_homomorphism(const StructureTensor& source, const StructureTensor& target, const Mat& phi)
{
    if (phi.rows() != target.dim() || phi.cols() != source.dim())
        throw Error(ErrorKind::ShapeMismatch, "homomorphism matrix must be target-dim x source-dim");
    const std::size_t d = source.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec diff = phi * source.basis_product(i, j) - target.apply(phi.col(i), phi.col(j));
            if (!is_zero(diff))
                return Verdict::fail("phi(x.y) != phi(x).phi(y)", {i, j}, std::move(diff));
        }
    return Verdict::ok();
}

Verdict check_homomorphism(const Algebra& source, const Algebra& target, const Mat& phi)
{
    if (source.flavor() != target.flavor())
        throw Error(ErrorKind::FlavorMismatch,
                    flavor_name(source.flavor()) + " vs " + flavor_name(target.flavor()));
    return check_homomorphism(source.product(), target.product(), phi);
}

MorphismTriple::MorphismTriple(Algebra g, Algebra h, Mat phi) : g_(std::move(g)), h_(std::move(h)), phi_(std::move(phi))
{
    if (!check_pre_lie(g_) || !check_pre_lie(h_))
        throw Error(ErrorKind::NotPreLie, "triple requires two pre-Lie algebras");
    if (g_.flavor() != Flavor::PreLie)
        g_ = Algebra(g_.product(), Flavor::PreLie, g_.basis());
    if (h_.flavor() != Flavor::PreLie)
        h_ = Algebra(h_.product(), Flavor::PreLie, h_.basis());
    const Verdict v = check_homomorphism(g_.product(), h_.product(), phi_);
    if (!v) {
        throw Error(ErrorKind::NotHomomorphism, "phi fails at basis pair (" + std::to_string(v.at[0] + 1) + "," +
                                                    std::to_string(v.at[1] + 1) + ")");
    }
}

}  // namespace prelie
