#include "affinemod/algebra.hpp"

#include <random>
#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

PresentedAlgebra::PresentedAlgebra(RingPtr ambient, Ideal defining, const EngineConfig& cfg)
    : ring_(std::move(ambient)), defining_(std::move(defining)) {
    if (defining_.has_generators()) {
        require_same_ring(ring_, defining_.ring(), "presented algebra");
        if (is_unit_ideal(defining_, cfg))
            throw PreconditionError("defining ideal is the unit ideal; "
                                    "the presentation collapses to the zero algebra");
    } else if (defining_.ring() == nullptr) {
        defining_ = Ideal(ring_, {});
    }
}

int PresentedAlgebra::dimension(const EngineConfig& cfg) const {
    return affinemod::dimension(defining_, cfg);
}

Polynomial PresentedAlgebra::reduce(const Polynomial& p, const EngineConfig& cfg) const {
    require_same_ring(p.ring(), ring_, "algebra reduce");
    if (!defining_.has_generators()) return p;
    return normal_form(p, defining_, MonomialOrder::degrevlex(ring_), cfg);
}

bool PresentedAlgebra::is_zero_element(const Polynomial& p, const EngineConfig& cfg) const {
    return reduce(p, cfg).is_zero();
}

std::string PresentedAlgebra::to_string() const {
    std::ostringstream os;
    os << ring_->to_string();
    if (defining_.has_generators()) {
        os << "/(";
        const auto& gens = defining_.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) os << ", ";
            os << gens[i].to_string();
        }
        os << ")";
    }
    return os.str();
}

bool is_regular_sequence(const std::vector<Polynomial>& bs, const PresentedAlgebra& ambient,
                         const EngineConfig& cfg) {
    if (bs.empty())
        throw PreconditionError("empty sequence");
    Ideal full = ambient.defining_ideal().with_extra(bs);
    if (is_unit_ideal(full, cfg)) return false;
    std::vector<Polynomial> prefix;
    for (const auto& b : bs) {
        require_same_ring(b.ring(), ambient.ring(), "is_regular_sequence");
        Ideal before = ambient.defining_ideal().with_extra(prefix);
        if (b.is_zero() || membership(b, before, cfg)) return false;
        if (before.has_generators()) {
            Ideal quot = colon_ideal(before, b, cfg);
            if (!ideal_equal(quot, before, cfg)) return false;
        }
        // Zero prefix ideal in a domain: any nonzero b is regular.
        prefix.push_back(b);
    }
    return true;
}

bool is_semiregular_sequence(const std::vector<Polynomial>& bs, const PresentedAlgebra& ambient,
                             const EngineConfig& cfg) {
    if (bs.empty())
        throw PreconditionError("empty sequence");
    for (const auto& b : bs)
        require_same_ring(b.ring(), ambient.ring(), "is_semiregular_sequence");
    int before = ambient.dimension(cfg);
    int after = dimension(ambient.defining_ideal().with_extra(bs), cfg);
    return after == before - static_cast<int>(bs.size());
}

bool gradient_generic_independence(const std::vector<Polynomial>& bs,
                                   const PresentedAlgebra& ambient,
                                   const EngineConfig& cfg) {
    if (bs.empty())
        throw PreconditionError("empty sequence");
    const RingPtr& ring = ambient.ring();
    const std::size_t s1 = bs.size();
    const std::size_t n = ring->size();
    if (s1 > n) return false;

    Ideal cut = ambient.defining_ideal().with_extra(bs);
    int cut_dim = dimension(cut, cfg);
    if (cut_dim < 0) return true; // empty zero set, nothing to pin down

    // All (s+1)-minors of the Jacobian of the sequence.
    std::vector<Polynomial> minors;
    std::vector<int> cols(s1, 0);
    struct Choose {
        std::size_t n, k;
        std::vector<Polynomial>& out;
        const std::vector<Polynomial>& bs;
        void run(std::vector<int>& cols, std::size_t idx, std::size_t start) {
            if (idx == k) {
                out.push_back(jacobian_determinant(bs, cols));
                return;
            }
            for (std::size_t c = start; c + (k - idx) <= n; ++c) {
                cols[idx] = static_cast<int>(c);
                run(cols, idx + 1, c + 1);
            }
        }
    } choose{n, s1, minors, bs};
    choose.run(cols, 0, 0);

    Ideal minor_locus = cut.with_extra(minors);
    return dimension(minor_locus, cfg) < cut_dim;
}

std::vector<Polynomial> generic_semiregular_extension(const Ideal& I, const Polynomial& f,
                                                      int target_length, unsigned long seed,
                                                      const EngineConfig& cfg) {
    require_same_ring(I.ring(), f.ring(), "generic_semiregular_extension");
    if (f.is_zero())
        throw PreconditionError("modulus f must be nonzero");
    if (!membership(f, I, cfg))
        throw PreconditionError("f must lie in I");
    const RingPtr& ring = I.ring();
    int codim = static_cast<int>(ring->size()) - dimension(I, cfg);
    if (target_length < 1 || target_length > codim)
        throw PreconditionError("target length " + std::to_string(target_length)
                                + " exceeds the codimension " + std::to_string(codim)
                                + " of the zero set of I");

    PresentedAlgebra free = PresentedAlgebra::free_algebra(ring);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const auto& gens = I.generators();

    auto random_linear = [&]() {
        Polynomial l = Polynomial::constant(ring, Rational(coeff(rng)));
        for (std::size_t v = 0; v < ring->size(); ++v)
            l = l + Polynomial::variable(ring, static_cast<int>(v)) * Rational(coeff(rng));
        return l;
    };

    for (int attempt = 0; attempt < cfg.extension_retries; ++attempt) {
        std::vector<Polynomial> bs{f};
        for (int i = 1; i < target_length; ++i) {
            Polynomial b(ring);
            for (const auto& g : gens) b = b + random_linear() * g;
            bs.push_back(b);
        }
        bool ok = true;
        for (const auto& b : bs)
            if (b.is_zero()) ok = false;
        if (ok && is_semiregular_sequence(bs, free, cfg)) return bs;
    }
    throw ResourceError("generic_semiregular_extension: retry budget exhausted; "
                        "the requested length is probably not attainable inside I");
}

} // namespace affinemod
