#ifndef AFFINEMOD_GRADING_HPP
#define AFFINEMOD_GRADING_HPP

#include <optional>

#include "affinemod/modification.hpp"

namespace affinemod {

// Weight synthesis for the family coordinates (x, y, z, v_1..v_m) plus one
// block (u_j,1..u_j,mj) per extra root. Two lexicographic levels emulate
// the required Q-independence; the first-level magnitude e is chosen
// against a degree bound so the v-weights dominate every comparison that
// principal-component extraction can meet.
struct ConventionWeights {
    WeightFunction weights;
    long long e = 0;          // recorded magnitude of the x-weight
    long degree_bound = 0;    // the bound e was checked against
};

// Ring (x, y, z, v1..vm, u<j>_<i>...) used by the weight synthesis and the
// family builder; block_sizes lists the variable count of each u-block.
RingPtr convention_ring(int m, const std::vector<int>& block_sizes = {});

// exponents: n_1..n_{m-1} of the defining tower; block_exponents: the
// n_{j,i} lists of the extra blocks. Requires gcd(k,l)=1 and k>l>=2.
ConventionWeights convention51_weights(int k, int l, const std::vector<int>& exponents,
                                       const std::vector<std::vector<int>>& block_exponents
                                           = {},
                                       long degree_bound = 10,
                                       std::optional<long long> e_override = std::nullopt);

// The associated graded data of a presented algebra under a weight
// function: the ideal generated by the principal components of the
// defining ideal, plus the standard basis the computation went through.
struct GradedPresentation {
    PresentedAlgebra source;
    WeightFunction weights;
    Ideal graded;                         // in the ambient ring
    std::vector<Polynomial> weight_basis; // standard basis under the weight order
    CertStatus status = CertStatus::Unverified; // regular-sequence check on the graded generators
};

GradedPresentation graded_ideal(const PresentedAlgebra& pres, const WeightFunction& w,
                                const EngineConfig& cfg = default_config());

// Minimal-degree representative: the principal component of the reduced
// form of `a`, guaranteed to lie outside the graded ideal. Errors when a
// is zero in the algebra.
Polynomial gr_element(const Polynomial& a, const GradedPresentation& gp,
                      const EngineConfig& cfg = default_config());

// Weight degree of a nonzero algebra element: the weight of its minimal
// representative.
WeightVector algebra_weight_degree(const Polynomial& a, const GradedPresentation& gp,
                                   const EngineConfig& cfg = default_config());

// True when the images of a and b in the graded algebra satisfy a nonzero
// polynomial relation; decided by elimination.
bool algebraically_dependent(const GradedPresentation& gp, const Polynomial& a,
                             const Polynomial& b, const EngineConfig& cfg = default_config());

// The finite list of d-homogeneous irreducible elements available on the
// family's graded algebra: the coordinates x, y, z, v_1..v_m and the
// parametric pencil y^k + c z^l (c a formal nonzero constant).
struct Candidate {
    enum class Kind { X, Y, Z, V, PencilYZ };
    Kind kind;
    int v_index = 0; // 1-based, for Kind::V
    std::string label;
    // Concrete representative; for the pencil this is the c = 1 member,
    // with c handled symbolically by the case analysis.
    Polynomial poly;
};

std::vector<Candidate> homogeneous_irreducible_candidates(const GradedPresentation& gp,
                                                          int k, int l, int m);

} // namespace affinemod

#endif
