#ifndef PRELIE_TRIPLE_HPP
#define PRELIE_TRIPLE_HPP

#include "prelie/cochain.hpp"

namespace prelie {

enum class Side { PreLie, CE };

/// Block sizes of a triple cochain space, always in the order
/// (g-part, h-part, mixed part).
///
/// PreLie, k >= 0:  C^{k+1}(g,g) + C^{k+1}(h,h) + C^k(g,h), with C^0(g,h) = 0.
/// CE,     k >= -1: C^{k+1}_CE(g,Hom(g,g)) + C^{k+1}_CE(h,Hom(h,h))
///                  + C^k_CE(g,Hom(g,h)), with C^{-1} = 0.
/// The CE side starts one degree lower so that Phi_k : CE^k -> PreLie^{k+1}
/// is an isomorphism in every degree.
struct TripleBlocks {
    std::size_t g = 0;
    std::size_t h = 0;
    std::size_t mixed = 0;
    std::size_t total() const { return g + h + mixed; }
};

TripleBlocks triple_blocks(const MorphismTriple& t, int k, Side side, std::size_t size_limit = kDefaultSizeLimit);

/// f1 -> phi o f1 on cochains with `wedge_len` antisymmetric slots:
/// coordinates (I, j, v) over g map to (I, j, w) with weight phi(w, v).
Mat post_compose_matrix(std::size_t wedge_len, const Mat& phi);

/// f2 -> f2(phi x_1, ..., phi x_wedge, phi y): from cochains on h with
/// values in h to cochains on g with values in h.
Mat pre_compose_matrix(std::size_t wedge_len, const Mat& phi);

/// delta_preLie : PreLie^k -> PreLie^{k+1}, k >= 0, as the block matrix
///   [ dM_g        0          0   ]
///   [ 0           dM_h       0   ]
///   [ (-1)^k P   -(-1)^k Q   dM_phi ]
Mat delta_prelie_matrix(const MorphismTriple& t, int k, std::size_t size_limit = kDefaultSizeLimit);

/// delta_CE : CE^k -> CE^{k+1}, k >= -1; same shape with CE differentials of
/// the hom-space representations of g, h and the morphism representation.
Mat delta_ce_matrix(const MorphismTriple& t, int k, std::size_t size_limit = kDefaultSizeLimit);

Mat delta_matrix(const MorphismTriple& t, int k, Side side, std::size_t size_limit = kDefaultSizeLimit);

/// Phi_k : CE^k -> PreLie^{k+1}. Under the shared lex coordinate order each
/// block is a relabeling; the mixed block carries a sign -1 so that
/// Phi_{k+1} delta_CE,k = delta_preLie,k+1 Phi_k.
Mat phi_matrix(const MorphismTriple& t, int k, std::size_t size_limit = kDefaultSizeLimit);

struct TripleCohomology {
    int degree = 0;
    Side side = Side::PreLie;
    std::size_t dim_cochains = 0;
    std::size_t rank_delta = 0;  // rank of the outgoing differential
    CohomologyResult cohomology;
};

/// H^k of the chosen side. PreLie: k >= 0, H^0 = ker delta_0. CE: k >= -1,
/// H^{-1} = ker delta_CE,-1. Propagates NotAComplex.
TripleCohomology triple_cohomology(const MorphismTriple& t, int k, Side side,
                                   std::size_t size_limit = kDefaultSizeLimit);

/// Phi_{k+1} delta_CE,k = delta_preLie,k+1 Phi_k and Phi_k invertible for
/// k = -1, ..., k_max.
Verdict verify_cochain_map(const MorphismTriple& t, int k_max, std::size_t size_limit = kDefaultSizeLimit);

}  // namespace prelie

#endif
