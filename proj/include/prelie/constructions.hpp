#ifndef PRELIE_CONSTRUCTIONS_HPP
#define PRELIE_CONSTRUCTIONS_HPP

#include "prelie/representation.hpp"

#include <string>
#include <vector>

namespace prelie {

/// Lie algebra with an antisymmetric bilinear form omega (d x d,
/// omega(e_i, e_j) = omega(i, j)).
struct SymplecticForm {
    Algebra lie_algebra;
    Mat omega;
};

/// Pre-Lie algebra with a symmetric r, stored as the matrix of r#: g* -> g.
struct SMatrixCandidate {
    Algebra algebra;
    Mat r;
};

/// Named sub-check of a composite certificate.
struct Certificate {
    std::string label;
    Verdict verdict;
};

bool all_pass(const std::vector<Certificate>& certs);

/// x *_D y = x . D(y) on a commutative associative algebra with a derivation.
/// Throws NotCommAssoc, NotDerivation (with the first failing pair).
Algebra derivation_to_prelie(const Algebra& a, const Mat& d_map);
Verdict check_derivation(const Algebra& a, const Mat& d_map);

/// Product defined by omega(x.y, z) = -omega(y, [x, z]). Throws NotLie,
/// NotAntisymmetric, Degenerate, NotCocycle.
Algebra symplectic_to_prelie(const SymplecticForm& s);
Verdict check_symplectic_cocycle(const SymplecticForm& s);

/// R(x).R(y) = R(R(x).y + x.R(y) + lambda x.y).
Verdict check_rota_baxter(const Algebra& a, const Mat& R, const Scalar& lambda);
/// x .^R y = R(x).y + x.R(y) + lambda x.y.
StructureTensor rota_baxter_product(const Algebra& a, const Mat& R, const Scalar& lambda);
/// ((g, .^R), (g, .), R). Throws NotRotaBaxter.
MorphismTriple rota_baxter_triple(const Algebra& a, const Mat& R, const Scalar& lambda);

/// N(x).N(y) = N(N(x).y + x.N(y) - N(x.y)).
Verdict check_nijenhuis(const Algebra& a, const Mat& N);
/// x ._N y = N(x).y + x.N(y) - N(x.y).
StructureTensor nijenhuis_product(const Algebra& a, const Mat& N);
/// ((g, ._N), (g, .), N). Throws NotNijenhuis.
MorphismTriple nijenhuis_triple(const Algebra& a, const Mat& N);

/// T(u).T(v) = T(rho(Tu)v + mu(Tv)u) for T: V -> g. Throws AlgebraMismatch
/// when rep is not a representation of a, ShapeMismatch on a bad T.
Verdict check_o_operator(const Algebra& a, const Representation& rep, const Mat& T);
/// u .^T v = rho(Tu)v + mu(Tv)u on V.
StructureTensor o_operator_product(const Representation& rep, const Mat& T);
/// ((V, .^T), (g, .), T). Throws NotOOperator.
MorphismTriple o_operator_triple(const Algebra& a, const Representation& rep, const Mat& T);

/// [[r,r]] evaluated directly at all dual-basis triples.
Verdict check_rr_bracket(const SMatrixCandidate& c);
/// Direct evaluation, cross-checked against the coregular O-operator test.
/// Throws NotSymmetric, CrossCheckMismatch.
Verdict check_s_matrix(const SMatrixCandidate& c);
/// ((g*, .^r), (g, .), r#). Throws NotSymmetric, NotSMatrix.
MorphismTriple s_matrix_triple(const SMatrixCandidate& c);

/// Polarized cross-identity of T1 and T2. Throws NotOOperator when either
/// operator fails on its own.
Verdict check_compatible_o(const Algebra& a, const Representation& rep, const Mat& T1, const Mat& T2);

struct NijenhuisPairConstruction {
    Mat N;  // T1 T2^{-1} on g
    Mat S;  // T2^{-1} T1 on V
    std::vector<Certificate> certificates;
};

/// Throws NotCompatible, SingularT2.
NijenhuisPairConstruction nijenhuis_pair_from_compatible(const Algebra& a, const Representation& rep, const Mat& T1,
                                                         const Mat& T2);

/// u ._S v = S(u).v + u.S(v) - S(u.v) on the given algebra. Throws
/// NotNijenhuis.
Algebra twisted_product(const Algebra& v_alg, const Mat& S);
/// ((V, .^{T}_S), (g, ._N), T). Throws NotNijenhuis, NotHomomorphism.
MorphismTriple twisted_triple(const Algebra& a, const Representation& rep, const Mat& T, const Mat& N, const Mat& S);

}  // namespace prelie

#endif
