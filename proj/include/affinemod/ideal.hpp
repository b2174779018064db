#ifndef AFFINEMOD_IDEAL_HPP
#define AFFINEMOD_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "affinemod/order.hpp"
#include "affinemod/polynomial.hpp"

namespace affinemod {

// Resource budgets and reproducibility knobs. Exhausting a budget raises
// ResourceError, never a silent wrong answer.
struct EngineConfig {
    std::size_t max_basis_size = 2048;
    std::size_t max_reduction_steps = 500000;
    int largest_ideal_cap = 8;
    int derivation_bound = 64;
    int extension_retries = 32;
    unsigned long seed = 0;
};

// Defaults, with AFFINEMOD_CAP_GROEBNER / AFFINEMOD_CAP_CHAIN applied.
const EngineConfig& default_config();

// A finitely generated ideal with a per-order cache of reduced Groebner
// bases. Copies share the cache; the cache is guarded for concurrent
// readers with single-writer insertion.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    Ideal with_extra(const std::vector<Polynomial>& more) const;

    const std::vector<Polynomial>& groebner(const MonomialOrder& ord,
                                            const EngineConfig& cfg = default_config()) const;

    std::vector<std::string> generator_strings() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::vector<Polynomial>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// --- reduction / basis machinery -------------------------------------------

// Full normal form against `basis` under a global order. When `quotients`
// is non-null it receives one cofactor per basis element with
// p = sum(quotients[i] * basis[i]) + remainder.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, const EngineConfig& cfg,
                       std::vector<Polynomial>* quotients = nullptr);

// Buchberger with sugar selection and coefficient normalization;
// returns the reduced Groebner basis. Requires a global order.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const EngineConfig& cfg = default_config());

// Standard basis for an arbitrary (possibly non-well) order, computed with
// Mora's weak normal form. Used only for initial-form extraction.
std::vector<Polynomial> standard_basis(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                       const EngineConfig& cfg = default_config());

// Head reduction with a step budget; the remainder, when nonzero, has a
// leading monomial outside the leading ideal of `basis`. Unlike the Mora
// routine this never multiplies by units, so it returns an exact
// representative of p modulo the ideal.
Polynomial reduce_plain(const Polynomial& p, const std::vector<Polynomial>& basis,
                        const MonomialOrder& ord, const EngineConfig& cfg);

// --- the spec operations ----------------------------------------------------

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const EngineConfig& cfg = default_config());

Polynomial normal_form(const Polynomial& p, const Ideal& I, const MonomialOrder& ord,
                       const EngineConfig& cfg = default_config());

struct MembershipCertificate {
    std::vector<Polynomial> basis;
    std::vector<Polynomial> cofactors; // p = sum cofactors[i]*basis[i]
};

bool membership(const Polynomial& p, const Ideal& I,
                const EngineConfig& cfg = default_config());
std::optional<MembershipCertificate> membership_certificate(
    const Polynomial& p, const Ideal& I, const EngineConfig& cfg = default_config());

bool ideal_equal(const Ideal& I, const Ideal& J,
                 const EngineConfig& cfg = default_config());
bool is_unit_ideal(const Ideal& I, const EngineConfig& cfg = default_config());

Ideal eliminate(const Ideal& I, const std::vector<int>& drop,
                const EngineConfig& cfg = default_config());
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop,
                const EngineConfig& cfg = default_config());

Ideal colon_ideal(const Ideal& I, const Polynomial& f,
                  const EngineConfig& cfg = default_config());

// Krull dimension of ring/I via maximal independent variable sets of the
// initial ideal; -1 for the unit ideal.
int dimension(const Ideal& I, const EngineConfig& cfg = default_config());

Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int m);

} // namespace affinemod

#endif
