#ifndef PRELIE_COCHAIN_HPP
#define PRELIE_COCHAIN_HPP

#include "prelie/representation.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace prelie {

inline constexpr std::size_t kDefaultSizeLimit = 1'000'000;

/// Strictly increasing k-subsets of {0, ..., d-1} in lexicographic order.
class Subsets {
public:
    Subsets(std::size_t d, std::size_t k);

    std::size_t d() const { return d_; }
    std::size_t k() const { return k_; }
    std::size_t count() const { return subsets_.size(); }
    const std::vector<std::size_t>& operator[](std::size_t rank) const { return subsets_[rank]; }
    /// Lex rank of a strictly increasing index list of length k.
    std::size_t rank_of(const std::vector<std::size_t>& sorted) const;

private:
    std::size_t d_;
    std::size_t k_;
    std::vector<std::vector<std::size_t>> subsets_;
    std::unordered_map<std::uint64_t, std::size_t> rank_;
};

/// Sorts `idx` in place; returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_with_sign(std::vector<std::size_t>& idx);

std::size_t binomial(std::size_t n, std::size_t k);

/// C^n_preLie(g, V) = Hom(wedge^{n-1} g (x) g, V), n >= 1. Basis (I, j, v)
/// with I an increasing (n-1)-subset, ordered lexicographically; the
/// coordinate index is (rank(I) * d + j) * m + v.
class PreLieCochainSpace {
public:
    /// Throws SizeLimit when the dimension exceeds `size_limit`.
    PreLieCochainSpace(std::size_t degree, std::size_t algebra_dim, std::size_t space_dim,
                       std::size_t size_limit = kDefaultSizeLimit);

    std::size_t degree() const { return degree_; }
    std::size_t algebra_dim() const { return d_; }
    std::size_t space_dim() const { return m_; }
    std::size_t dim() const { return wedge_.count() * d_ * m_; }
    const Subsets& wedge() const { return wedge_; }

    std::size_t index(std::size_t wedge_rank, std::size_t j, std::size_t v) const
    {
        return (wedge_rank * d_ + j) * m_ + v;
    }
    /// Human-readable (I, j, v) labels in coordinate order.
    std::vector<std::string> basis_labels() const;

private:
    std::size_t degree_;
    std::size_t d_;
    std::size_t m_;
    Subsets wedge_;
};

/// C^n_CE(g, W) = Hom(wedge^n g, W), n >= 0. Basis (I, w), coordinate index
/// rank(I) * space_dim + w.
class CECochainSpace {
public:
    CECochainSpace(std::size_t degree, std::size_t algebra_dim, std::size_t space_dim,
                   std::size_t size_limit = kDefaultSizeLimit);

    std::size_t degree() const { return degree_; }
    std::size_t algebra_dim() const { return d_; }
    std::size_t space_dim() const { return w_; }
    std::size_t dim() const { return wedge_.count() * w_; }
    const Subsets& wedge() const { return wedge_; }

    std::size_t index(std::size_t wedge_rank, std::size_t v) const { return wedge_rank * w_ + v; }
    std::vector<std::string> basis_labels() const;

private:
    std::size_t degree_;
    std::size_t d_;
    std::size_t w_;
    Subsets wedge_;
};

enum class CochainKind { PreLie, CE };

/// Coordinates of a cochain in the basis order of its space.
struct Cochain {
    CochainKind kind = CochainKind::PreLie;
    std::size_t degree = 1;
    std::size_t algebra_dim = 0;
    std::size_t space_dim = 0;
    Vec coords;
};

/// Multilinear evaluation on arbitrary argument vectors. PreLie cochains are
/// antisymmetric in their first degree-1 slots; CE cochains in all slots.
/// Throws ArityMismatch when args.size() != degree.
Vec evaluate(const Cochain& f, const std::vector<Vec>& args);

/// Matrix of dM: C^n_preLie(g, V) -> C^{n+1}_preLie(g, V), n >= 1.
Mat prelie_d_matrix(std::size_t n, const Representation& rep, std::size_t size_limit = kDefaultSizeLimit);

/// Matrix of the Chevalley-Eilenberg differential C^n_CE -> C^{n+1}_CE, n >= 0.
Mat ce_d_matrix(std::size_t n, const LieRepresentation& rep, std::size_t size_limit = kDefaultSizeLimit);

struct CohomologyResult {
    std::size_t dimension = 0;
    std::size_t kernel_dim = 0;
    std::size_t image_rank = 0;
    std::vector<Vec> representatives;
};

/// Cohomology at the middle space of  . --d_low--> C --d_high--> . ;
/// `space_dim` is dim C (needed when both maps are empty). Throws
/// NotAComplex when d_high * d_low != 0.
CohomologyResult cohomology(const Mat& d_low, const Mat& d_high, std::size_t space_dim);

}  // namespace prelie

#endif
