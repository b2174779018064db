#ifndef AFFINEMOD_MODIFICATION_HPP
#define AFFINEMOD_MODIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "affinemod/algebra.hpp"

namespace affinemod {

enum class CertStatus {
    RegularSequenceCertified,
    Unverified,
};

const char* to_string(CertStatus s);

// The locus (I, f) of an affine modification of `base`, together with the
// chosen generator sequence b_0 = f, b_1, ..., b_s. Normalization: f must
// lie in I (add f to I beforehand when it does not).
class ModificationLocus {
public:
    // `modulus_factored` records f = g^n when the modulus is a power;
    // divisor reduction and the decomposition step need the factored form.
    static ModificationLocus make(PresentedAlgebra base, Ideal center, Polynomial modulus,
                                  std::optional<std::pair<Polynomial, int>> modulus_factored
                                      = std::nullopt,
                                  std::optional<std::vector<Polynomial>> generator_sequence
                                      = std::nullopt,
                                  const EngineConfig& cfg = default_config());

    const PresentedAlgebra& base() const { return base_; }
    const Ideal& center() const { return center_; }
    const Polynomial& modulus() const { return modulus_; }
    const std::optional<std::pair<Polynomial, int>>& modulus_factored() const {
        return factored_;
    }
    // b_0 = f first.
    const std::vector<Polynomial>& generator_sequence() const { return gens_; }

private:
    PresentedAlgebra base_;
    Ideal center_;
    Polynomial modulus_;
    std::optional<std::pair<Polynomial, int>> factored_;
    std::vector<Polynomial> gens_;
};

// Presentation of base[I/f] by the relations L_i = f*y_i - b_i over the
// base variables plus fresh y_1..y_s. Exactly the modification when the
// relation ideal is prime; the regular-sequence criterion is the one
// certificate implemented, everything else is flagged unverified.
struct DavisPresentation {
    PresentedAlgebra algebra;
    PresentedAlgebra base;
    std::vector<Polynomial> relations; // the L_i, in the extended ring
    std::vector<std::string> new_variables;
    CertStatus status = CertStatus::Unverified;
};

DavisPresentation davis_presentation(const ModificationLocus& loc,
                                     const std::vector<std::string>& new_names = {},
                                     const EngineConfig& cfg = default_config());

struct ModificationIdeals {
    Ideal exceptional;              // in the extended ring
    Ideal divisor;                  // in the base ring
    Ideal center;                   // in the base ring
    Ideal geometric_center_closure; // in the base ring
};

ModificationIdeals modification_ideals(const ModificationLocus& loc,
                                       const DavisPresentation& pres,
                                       const EngineConfig& cfg = default_config());

struct LargestIdealResult {
    Ideal ideal;
    int stabilized_at = 0; // first m with K_m = K_{m+1} (confirmed once more)
    bool cap_reached = false;
};

// Ascending chain K_m = (I^m : f^{m-1}) modulo the base relations; the
// union is the f-largest ideal. Consecutive equality plus one confirmation
// step is the stabilization test; hitting the cap flags a lower bound.
LargestIdealResult largest_ideal(const ModificationLocus& loc, int cap = 0,
                                 const EngineConfig& cfg = default_config());

struct SplitResult {
    ModificationLocus first;       // (ideal(I, f1), f1) over the base
    DavisPresentation first_davis; // the intermediate algebra
    ModificationLocus second;      // ((I/f1), f2) over the intermediate algebra
};

// Factorization step: with f = f1*f2, the modification splits through
// base[(I,f1)/f1]; the second locus carries the transferred generators.
SplitResult compose_split(const ModificationLocus& loc, const Polynomial& f1,
                          const Polynomial& f2,
                          const std::vector<std::string>& first_names = {},
                          const EngineConfig& cfg = default_config());

struct FiberProductResult {
    PresentedAlgebra algebra;
    std::vector<std::vector<std::string>> block_variables;
    std::vector<CertStatus> block_status;
};

// Concatenated presentation of simultaneous modifications whose moduli
// have no common zeros on the base.
FiberProductResult fiber_product_presentation(const std::vector<ModificationLocus>& locs,
                                              const std::vector<std::vector<std::string>>&
                                                  block_names = {},
                                              const EngineConfig& cfg = default_config());

struct BasicStepResult {
    DavisPresentation next;
    ModificationLocus transferred; // locus (K_1, g^{n-1}) over `next`
};

// One step of the decomposition into basic modifications: the locus must
// carry a factored modulus g^n; center_gens = the locus generator sequence
// starting with g must be semi-regular with generically independent
// gradients. The transferred locus has modulus g^(n-1) and generators
// g^(n-1) together with the new Davis variables b_i/g.
BasicStepResult basic_step(const ModificationLocus& loc,
                           const std::vector<std::string>& new_names = {},
                           const EngineConfig& cfg = default_config());

// Helper shared with the verification tests: membership of p in the
// localized presentation (relations + f*t - 1 for a fresh t).
bool localized_member(const PresentedAlgebra& pres, const Polynomial& f, const Polynomial& p,
                      const EngineConfig& cfg = default_config());

} // namespace affinemod

#endif
