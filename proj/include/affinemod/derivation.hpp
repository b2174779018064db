#ifndef AFFINEMOD_DERIVATION_HPP
#define AFFINEMOD_DERIVATION_HPP

#include <optional>

#include "affinemod/grading.hpp"

namespace affinemod {

// A derivation of a presented algebra, stored through its images on the
// ring variables and extended by the Leibniz rule. Construction certifies
// well-definedness: the extension maps every defining relation into the
// defining ideal.
class Derivation {
public:
    static Derivation make(PresentedAlgebra algebra, std::vector<Polynomial> images,
                           const EngineConfig& cfg = default_config());

    const PresentedAlgebra& algebra() const { return algebra_; }
    const std::vector<Polynomial>& images() const { return images_; }

private:
    PresentedAlgebra algebra_;
    std::vector<Polynomial> images_;
};

// Leibniz extension applied to a, reduced modulo the defining ideal.
Polynomial derive(const Derivation& D, const Polynomial& a,
                  const EngineConfig& cfg = default_config());

bool kernel_member(const Derivation& D, const Polynomial& a,
                   const EngineConfig& cfg = default_config());

struct NilpotencyWitness {
    std::string variable; // the generator a with a | D(a), D(a) != 0
    Polynomial element;
    Polynomial image;
};

struct NilpotencyVerdict {
    enum class Status { NilpotentCertified, NotNilpotent, Inconclusive };
    Status status = Status::Inconclusive;
    int bound = 0;
    // Per ring variable, the exact degree max{k : D^k != 0}; only when certified.
    std::vector<std::pair<std::string, int>> generator_degrees;
    std::optional<NilpotencyWitness> witness;
};

// Iterates D on every generator. All chains reaching zero within the
// bound certifies local nilpotency (finite generation plus Leibniz). A
// generator a with D(a) nonzero inside (a) refutes it: the degree of D(a)
// would have to drop by one yet a | D(a) forces it up. Anything else is
// reported inconclusive at the bound.
NilpotencyVerdict lnd_check(const Derivation& D, int bound = 0,
                            const EngineConfig& cfg = default_config());

struct DegreeReport {
    Polynomial element;
    int degree = 0;
};

// max{k : D^k(a) != 0}, by iterated application; errors when the chain
// fails to terminate within the bound.
DegreeReport derivation_degree(const Derivation& D, const Polynomial& a, int bound = 0,
                               const EngineConfig& cfg = default_config());

// exp(tD)(a) = sum t^k D^k(a)/k! over the ring extended by the formal
// parameter; requires a terminating chain.
Polynomial exp_action(const Derivation& D, const std::string& t_name, const Polynomial& a,
                      int bound = 0, const EngineConfig& cfg = default_config());

// The Jacobian-type derivation on the family's graded algebra: the image
// of a is the full Jacobian determinant of the defining relations, the two
// kernel lifts, and a, taken with respect to all coordinates and reduced
// modulo the graded ideal.
Derivation jacobian_derivation(const GradedPresentation& gp, const Polynomial& a1,
                               const Polynomial& a2,
                               const EngineConfig& cfg = default_config());

} // namespace affinemod

#endif
