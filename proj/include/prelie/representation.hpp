#ifndef PRELIE_REPRESENTATION_HPP
#define PRELIE_REPRESENTATION_HPP

#include "prelie/algebra.hpp"

#include <vector>

namespace prelie {

/// Representation (V; rho, mu) of a pre-Lie algebra: one rho and one mu
/// matrix (space_dim x space_dim) per basis element of the algebra.
struct Representation {
    Algebra algebra;
    std::size_t space_dim = 0;
    std::vector<Mat> rho;
    std::vector<Mat> mu;

    /// rho(x) and mu(x) extended linearly to an arbitrary algebra vector.
    Mat rho_of(const Vec& x) const;
    Mat mu_of(const Vec& x) const;
};

/// Representation of a Lie algebra on a space of dimension space_dim.
struct LieRepresentation {
    Algebra algebra;
    std::size_t space_dim = 0;
    std::vector<Mat> rho;

    Mat rho_of(const Vec& x) const;
};

/// rho is a Lie representation of the sub-adjacent algebra and
/// rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x) on basis pairs.
/// Throws ShapeMismatch for inconsistent shapes.
Verdict check_representation(const Representation& r);
Verdict check_lie_representation(const LieRepresentation& r);

Representation trivial_rep(const Algebra& a, std::size_t space_dim);
/// (g; L, R). Throws NotPreLie.
Representation regular_rep(const Algebra& a);
/// (g*; ad* = L* - R*, -R*) with the dual identified with column vectors:
/// rho(e_i) = -L_i^T + R_i^T, mu(e_i) = R_i^T. Throws NotPreLie.
Representation coregular_rep(const Algebra& a);
/// (h; rho_phi, mu_phi) with rho_phi(x)u = phi(x).u and mu_phi(x)u = u.phi(x).
Representation morphism_rep(const MorphismTriple& t);

/// Representation of the sub-adjacent Lie algebra on Hom(g, V):
///   varrho(x)(f)(y) = rho(x) f(y) + mu(y) f(x) - f(x.y).
/// Hom(g, V) is coordinatized by (input j, output v) in lex order, so the
/// coordinate of f at j*space_dim + v is the v-th component of f(e_j).
LieRepresentation hom_space_rep(const Algebra& a, const Representation& r);

}  // namespace prelie

#endif
