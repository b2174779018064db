#include "affinemod/modification.hpp"

#include <algorithm>

#include "affinemod/errors.hpp"

namespace affinemod {

const char* to_string(CertStatus s) {
    switch (s) {
    case CertStatus::RegularSequenceCertified: return "regular-sequence-certified";
    case CertStatus::Unverified: return "unverified";
    }
    return "unverified";
}

namespace {

std::string fresh_var(const RingPtr& ring, const std::string& base,
                      const std::vector<std::string>& taken) {
    auto used = [&](const std::string& n) {
        if (ring->index(n) >= 0) return true;
        return std::find(taken.begin(), taken.end(), n) != taken.end();
    };
    if (!used(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!used(cand)) return cand;
    }
}

std::vector<std::string> davis_names(const ModificationLocus& loc,
                                     const std::vector<std::string>& requested,
                                     std::size_t count) {
    if (!requested.empty() && requested.size() != count)
        throw PreconditionError("expected " + std::to_string(count)
                                + " fresh variable names, got "
                                + std::to_string(requested.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        std::string want = requested.empty() ? "y" + std::to_string(i + 1) : requested[i];
        names.push_back(fresh_var(loc.base().ring(), want, names));
        if (!requested.empty() && names.back() != want)
            throw PreconditionError("variable name " + want + " collides with the base ring");
    }
    return names;
}

Ideal plus_defining(const Ideal& I, const PresentedAlgebra& base) {
    return base.defining_ideal().with_extra(I.generators());
}

} // namespace

ModificationLocus ModificationLocus::make(
    PresentedAlgebra base, Ideal center, Polynomial modulus,
    std::optional<std::pair<Polynomial, int>> modulus_factored,
    std::optional<std::vector<Polynomial>> generator_sequence, const EngineConfig& cfg) {
    require_same_ring(base.ring(), center.ring(), "modification locus");
    require_same_ring(base.ring(), modulus.ring(), "modification locus");
    if (modulus.is_zero() || base.is_zero_element(modulus, cfg))
        throw PreconditionError("the modulus f must be nonzero in the base algebra");
    Ideal full = plus_defining(center, base);
    if (!membership(modulus, full, cfg))
        throw PreconditionError("f must lie in I (normalize by adding f to the locus ideal)");
    if (modulus_factored) {
        const auto& [g, n] = *modulus_factored;
        if (n < 1)
            throw PreconditionError("the factored modulus needs a positive exponent");
        if (g.pow(static_cast<unsigned long>(n)) != modulus)
            throw PreconditionError("factored modulus does not multiply out to f");
    }

    ModificationLocus loc;
    loc.base_ = std::move(base);
    loc.center_ = std::move(center);
    loc.modulus_ = std::move(modulus);
    loc.factored_ = std::move(modulus_factored);
    if (generator_sequence) {
        loc.gens_ = std::move(*generator_sequence);
        if (loc.gens_.empty() || loc.gens_[0] != loc.modulus_)
            throw PreconditionError("the generator sequence must start with f");
        for (const auto& b : loc.gens_)
            if (!membership(b, plus_defining(loc.center_, loc.base_), cfg))
                throw PreconditionError("generator " + b.to_string()
                                        + " does not lie in the locus ideal");
    } else {
        loc.gens_.push_back(loc.modulus_);
        for (const auto& g : loc.center_.generators())
            if (g != loc.modulus_) loc.gens_.push_back(g);
    }
    return loc;
}

DavisPresentation davis_presentation(const ModificationLocus& loc,
                                     const std::vector<std::string>& new_names,
                                     const EngineConfig& cfg) {
    const auto& bs = loc.generator_sequence();
    const std::size_t s = bs.size() - 1;
    std::vector<std::string> names = davis_names(loc, new_names, s);
    RingPtr ext = loc.base().ring()->extended(names);

    std::vector<Polynomial> relations;
    relations.reserve(s);
    Polynomial f = lift_to_ring(loc.modulus(), ext);
    for (std::size_t i = 0; i < s; ++i) {
        Polynomial yi = Polynomial::variable(ext, ext->index_checked(names[i]));
        relations.push_back(f * yi - lift_to_ring(bs[i + 1], ext));
    }
    std::vector<Polynomial> defining;
    for (const auto& g : loc.base().defining_ideal().generators())
        defining.push_back(lift_to_ring(g, ext));
    defining.insert(defining.end(), relations.begin(), relations.end());

    DavisPresentation out;
    out.base = loc.base();
    out.algebra = PresentedAlgebra(ext, Ideal(ext, std::move(defining)), cfg);
    out.relations = std::move(relations);
    out.new_variables = std::move(names);
    out.status = is_regular_sequence(bs, loc.base(), cfg)
                     ? CertStatus::RegularSequenceCertified
                     : CertStatus::Unverified;
    return out;
}

ModificationIdeals modification_ideals(const ModificationLocus& loc,
                                       const DavisPresentation& pres,
                                       const EngineConfig& cfg) {
    const RingPtr& ext = pres.algebra.ring();
    const RingPtr& base_ring = loc.base().ring();
    Polynomial reduced_modulus = loc.modulus_factored()
                                     ? squarefree_part(loc.modulus_factored()->first)
                                     : squarefree_part(loc.modulus());

    ModificationIdeals out;
    out.exceptional =
        pres.algebra.defining_ideal().with_extra({lift_to_ring(reduced_modulus, ext)});
    out.divisor = loc.base().defining_ideal().with_extra({reduced_modulus});
    out.center = loc.center();

    std::vector<int> drop;
    for (const auto& n : pres.new_variables) drop.push_back(ext->index_checked(n));
    Ideal closure_ext = eliminate(out.exceptional, drop, cfg);
    std::vector<Polynomial> closure;
    for (const auto& g : closure_ext.generators())
        closure.push_back(restrict_to_ring(g, base_ring));
    out.geometric_center_closure = Ideal(base_ring, std::move(closure));
    return out;
}

LargestIdealResult largest_ideal(const ModificationLocus& loc, int cap,
                                 const EngineConfig& cfg) {
    if (cap <= 0) cap = cfg.largest_ideal_cap;
    const PresentedAlgebra& base = loc.base();
    Ideal I = plus_defining(loc.center(), base);

    auto chain_term = [&](int m) {
        Ideal power = ideal_power(I, m);
        if (m == 1) return power;
        return colon_ideal(power, loc.modulus().pow(static_cast<unsigned long>(m - 1)), cfg);
    };

    LargestIdealResult out;
    Ideal prev = chain_term(1);
    int prev_m = 1;
    Ideal cur = chain_term(2);
    for (int m = 2;; ++m) {
        if (ideal_equal(prev, cur, cfg)) {
            // One confirmation step guards against accidental equality.
            Ideal next = chain_term(m + 1);
            if (ideal_equal(cur, next, cfg)) {
                out.ideal = prev;
                out.stabilized_at = prev_m;
                return out;
            }
            prev = std::move(cur);
            prev_m = m;
            cur = std::move(next);
            continue;
        }
        if (m >= cap) {
            out.ideal = cur;
            out.stabilized_at = m;
            out.cap_reached = true;
            return out;
        }
        prev = std::move(cur);
        prev_m = m;
        cur = chain_term(m + 1);
    }
}

SplitResult compose_split(const ModificationLocus& loc, const Polynomial& f1,
                          const Polynomial& f2, const std::vector<std::string>& first_names,
                          const EngineConfig& cfg) {
    require_same_ring(loc.base().ring(), f1.ring(), "compose_split");
    require_same_ring(loc.base().ring(), f2.ring(), "compose_split");
    if (f1 * f2 != loc.modulus())
        throw PreconditionError("compose_split: f1*f2 does not equal the modulus");

    // First locus: (ideal generated by I and f1, f1), with redundant
    // generators pruned greedily so the intermediate algebra stays small.
    std::vector<Polynomial> seq{f1};
    for (const auto& b : loc.generator_sequence()) {
        if (b == f1) continue;
        Ideal sofar = plus_defining(Ideal(loc.base().ring(), seq), loc.base());
        if (membership(b, sofar, cfg)) continue;
        seq.push_back(b);
    }
    Ideal I1(loc.base().ring(), seq);
    ModificationLocus first = ModificationLocus::make(loc.base(), I1, f1, std::nullopt,
                                                      std::vector<Polynomial>(seq), cfg);
    DavisPresentation first_davis = davis_presentation(first, first_names, cfg);

    // Second locus over the intermediate algebra: generated by I/f1, which
    // the Davis variables realize, together with f2 = f/f1.
    const RingPtr& ext = first_davis.algebra.ring();
    Polynomial f2e = lift_to_ring(f2, ext);
    std::vector<Polynomial> seq2{f2e};
    for (const auto& n : first_davis.new_variables) {
        Polynomial v = Polynomial::variable(ext, ext->index_checked(n));
        Ideal sofar = plus_defining(Ideal(ext, seq2), first_davis.algebra);
        if (membership(v, sofar, cfg)) continue;
        seq2.push_back(v);
    }
    Ideal I2(ext, seq2);
    ModificationLocus second = ModificationLocus::make(
        first_davis.algebra, I2, f2e, std::nullopt, std::vector<Polynomial>(seq2), cfg);

    return SplitResult{std::move(first), std::move(first_davis), std::move(second)};
}

FiberProductResult fiber_product_presentation(
    const std::vector<ModificationLocus>& locs,
    const std::vector<std::vector<std::string>>& block_names, const EngineConfig& cfg) {
    if (locs.empty())
        throw PreconditionError("fiber product of no loci");
    const PresentedAlgebra& base = locs[0].base();
    for (const auto& l : locs)
        require_same_ring(base.ring(), l.base().ring(), "fiber_product_presentation");

    for (std::size_t j = 0; j < locs.size(); ++j)
        for (std::size_t l = j + 1; l < locs.size(); ++l) {
            Ideal both = base.defining_ideal().with_extra(
                {locs[j].modulus(), locs[l].modulus()});
            if (!is_unit_ideal(both, cfg))
                throw PreconditionError(
                    "fiber product needs moduli without common zeros; the pair ("
                    + locs[j].modulus().to_string() + ", " + locs[l].modulus().to_string()
                    + ") fails");
        }

    std::vector<std::string> all_names;
    std::vector<std::vector<std::string>> per_block;
    for (std::size_t j = 0; j < locs.size(); ++j) {
        const std::size_t s = locs[j].generator_sequence().size() - 1;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < s; ++i) {
            std::string want = (j < block_names.size() && i < block_names[j].size())
                                   ? block_names[j][i]
                                   : "z" + std::to_string(j + 1) + "_" + std::to_string(i + 1);
            names.push_back(fresh_var(base.ring(), want, all_names));
            all_names.push_back(names.back());
        }
        per_block.push_back(std::move(names));
    }

    RingPtr ext = base.ring()->extended(all_names);
    std::vector<Polynomial> defining;
    for (const auto& g : base.defining_ideal().generators())
        defining.push_back(lift_to_ring(g, ext));
    std::vector<CertStatus> statuses;
    for (std::size_t j = 0; j < locs.size(); ++j) {
        const auto& bs = locs[j].generator_sequence();
        Polynomial f = lift_to_ring(locs[j].modulus(), ext);
        for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
            Polynomial yi = Polynomial::variable(ext, ext->index_checked(per_block[j][i]));
            defining.push_back(f * yi - lift_to_ring(bs[i + 1], ext));
        }
        statuses.push_back(is_regular_sequence(bs, locs[j].base(), cfg)
                               ? CertStatus::RegularSequenceCertified
                               : CertStatus::Unverified);
    }

    FiberProductResult out;
    out.algebra = PresentedAlgebra(ext, Ideal(ext, std::move(defining)), cfg);
    out.block_variables = std::move(per_block);
    out.block_status = std::move(statuses);
    return out;
}

BasicStepResult basic_step(const ModificationLocus& loc,
                           const std::vector<std::string>& new_names,
                           const EngineConfig& cfg) {
    if (!loc.modulus_factored())
        throw PreconditionError("basic_step needs the modulus in factored form g^n");
    const auto& [g, n] = *loc.modulus_factored();
    const auto& center_gens = loc.generator_sequence();
    // The step modifies along (center, g), not the full modulus power.
    std::vector<Polynomial> step_seq = center_gens;
    if (step_seq[0] != g) {
        if (step_seq[0] == loc.modulus()) step_seq[0] = g;
        else throw PreconditionError("basic_step: generator sequence must begin with g");
    }
    if (!is_semiregular_sequence(step_seq, loc.base(), cfg))
        throw PreconditionError("basic_step: the center sequence is not semi-regular "
                                "(the modification is not semi-basic along it)");
    if (!gradient_generic_independence(step_seq, loc.base(), cfg))
        throw PreconditionError("basic_step: gradients are dependent at generic points "
                                "of the center (the modification is not basic along it)");

    Ideal step_center(loc.base().ring(), step_seq);
    ModificationLocus step = ModificationLocus::make(loc.base(), step_center, g, std::nullopt,
                                                     std::vector<Polynomial>(step_seq), cfg);
    DavisPresentation next = davis_presentation(step, new_names, cfg);

    // Transferred locus over the new algebra, with modulus g^(n-1) and
    // generators g^(n-1) together with the images b_i/g.
    const RingPtr& ext = next.algebra.ring();
    Polynomial ge = lift_to_ring(g, ext);
    Polynomial next_modulus = ge.pow(static_cast<unsigned long>(n - 1));
    std::vector<Polynomial> k1{next_modulus};
    std::optional<std::pair<Polynomial, int>> factored;
    if (n > 1) {
        for (const auto& nme : next.new_variables)
            k1.push_back(Polynomial::variable(ext, ext->index_checked(nme)));
        factored = std::make_pair(ge, n - 1);
    }
    // For n = 1 the remaining modulus is g^0 = 1: an identity modification.
    ModificationLocus transferred = ModificationLocus::make(
        next.algebra, Ideal(ext, k1), next_modulus, factored,
        std::vector<Polynomial>(k1), cfg);
    return BasicStepResult{std::move(next), std::move(transferred)};
}

bool localized_member(const PresentedAlgebra& pres, const Polynomial& f, const Polynomial& p,
                      const EngineConfig& cfg) {
    const RingPtr& ring = pres.ring();
    std::string tn = "@inv";
    while (ring->index(tn) >= 0) tn += "x";
    RingPtr ext = ring->extended({tn});
    Polynomial t = Polynomial::variable(ext, ext->index_checked(tn));
    std::vector<Polynomial> gens;
    for (const auto& g : pres.defining_ideal().generators())
        gens.push_back(lift_to_ring(g, ext));
    gens.push_back(lift_to_ring(f, ext) * t - Polynomial::constant(ext, Rational(1)));
    return membership(lift_to_ring(p, ext), Ideal(ext, std::move(gens)), cfg);
}

} // namespace affinemod
