#ifndef PRELIE_DEFORMATIONS_HPP
#define PRELIE_DEFORMATIONS_HPP

#include "prelie/constructions.hpp"
#include "prelie/triple.hpp"

namespace prelie {

/// (omega, varpi, theta): bilinear maps on g and h and a linear map g -> h.
struct DeformationGenerator {
    MorphismTriple triple;
    StructureTensor omega;
    StructureTensor varpi;
    Mat theta;
};

/// Operators N on the source algebra and S on the target algebra.
struct NijenhuisPair {
    MorphismTriple triple;
    Mat N;
    Mat S;
};

struct LabeledReport {
    std::vector<Certificate> equations;
    bool pass() const { return all_pass(equations); }
    const Certificate* find(const std::string& label) const;
};

DeformationGenerator zero_generator(const MorphismTriple& t);

/// Throws ShapeMismatch unless omega, varpi, theta fit the triple.
void require_shapes(const DeformationGenerator& gen);

/// Coordinates of (omega, varpi, theta) in the degree-1 triple cochain space.
Vec generator_coords(const DeformationGenerator& gen);
DeformationGenerator generator_from_coords(const MorphismTriple& t, const Vec& coords);
/// Coordinates of (N, S, 0) in the degree-0 triple cochain space.
Vec degree0_coords(const MorphismTriple& t, const Mat& N, const Mat& S);

/// The six labeled identities ("2-cocycle g", "omega bracket",
/// "eq:2-cocycle h", "varpi bracket", "1-cocycle phi", "eq:theta2"),
/// cross-checked against delta_1 and check_pre_lie. Throws CrossCheckMismatch.
LabeledReport check_generator(const DeformationGenerator& gen);

/// delta_preLie,1 (omega, varpi, theta) = 0.
Verdict check_closed(const DeformationGenerator& gen);

/// The eight labeled identities ("2-exact" ... "eq:relation8") with gen_b in
/// the primed role, cross-checked against delta_0(N, S, 0). Throws
/// TripleMismatch, CrossCheckMismatch, ShapeMismatch.
LabeledReport check_equivalence(const DeformationGenerator& gen_a, const DeformationGenerator& gen_b, const Mat& N,
                                const Mat& S);

/// "Nijenhuis N", "Nijenhuis S", "eq:Nijenhuis3" (S phi N = S^2 phi).
LabeledReport check_nijenhuis_pair(const NijenhuisPair& p);

/// omega = dM_g N, varpi = dM_h S, theta = phi N - S phi. Throws
/// NotNijenhuisPair.
DeformationGenerator trivial_deformation(const NijenhuisPair& p);

struct CohomologyClass {
    std::size_t h1_dim = 0;
    Vec coords;  // in the H^1 representative basis
    bool is_zero() const { return prelie::is_zero(coords); }
};

/// Throws NotClosed.
CohomologyClass cohomology_class(const DeformationGenerator& gen);
/// Pass iff gen_a - gen_b lies in im(delta_0). Throws NotClosed,
/// TripleMismatch.
Verdict same_class(const DeformationGenerator& gen_a, const DeformationGenerator& gen_b);

}  // namespace prelie

#endif
