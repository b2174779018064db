#ifndef AFFINEMOD_ALGEBRA_HPP
#define AFFINEMOD_ALGEBRA_HPP

#include "affinemod/ideal.hpp"

namespace affinemod {

// Ambient polynomial ring plus defining ideal. Houses the affine domains
// and their quotients throughout.
class PresentedAlgebra {
public:
    PresentedAlgebra() = default;
    PresentedAlgebra(RingPtr ambient, Ideal defining,
                     const EngineConfig& cfg = default_config());

    static PresentedAlgebra free_algebra(const RingPtr& ring) {
        return PresentedAlgebra(ring, Ideal(ring, {}));
    }

    const RingPtr& ring() const { return ring_; }
    const Ideal& defining_ideal() const { return defining_; }
    bool is_free() const { return !defining_.has_generators(); }

    int dimension(const EngineConfig& cfg = default_config()) const;

    // Normal form against the defining ideal (degrevlex).
    Polynomial reduce(const Polynomial& p, const EngineConfig& cfg = default_config()) const;
    bool is_zero_element(const Polynomial& p, const EngineConfig& cfg = default_config()) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    Ideal defining_;
};

// The image of each b_i is not a zero divisor modulo the previous ones:
// ((b_0..b_{i-1}) + defining) : b_i equals (b_0..b_{i-1}) + defining for
// every i, and the full ideal stays proper.
bool is_regular_sequence(const std::vector<Polynomial>& bs, const PresentedAlgebra& ambient,
                         const EngineConfig& cfg = default_config());

// Height test: adding the sequence drops the dimension by exactly its length.
bool is_semiregular_sequence(const std::vector<Polynomial>& bs, const PresentedAlgebra& ambient,
                             const EngineConfig& cfg = default_config());

// The (s+1)-minors of the Jacobian of bs cut the zero set of bs in a set
// of strictly smaller dimension; the computable surrogate for gradients
// being independent at generic points of each component.
bool gradient_generic_independence(const std::vector<Polynomial>& bs,
                                   const PresentedAlgebra& ambient,
                                   const EngineConfig& cfg = default_config());

// Extends f to a semi-regular sequence b_0 = f, b_1, ... of the requested
// length inside I, each b_i a random linear-polynomial combination of the
// given generators; retries with fresh randomness up to cfg.extension_retries.
std::vector<Polynomial> generic_semiregular_extension(
    const Ideal& I, const Polynomial& f, int target_length, unsigned long seed,
    const EngineConfig& cfg = default_config());

} // namespace affinemod

#endif
