#include "affinemod/derivation.hpp"

#include "affinemod/errors.hpp"

namespace affinemod {

Derivation Derivation::make(PresentedAlgebra algebra, std::vector<Polynomial> images,
                            const EngineConfig& cfg) {
    const RingPtr& ring = algebra.ring();
    if (images.size() != ring->size())
        throw PreconditionError("a derivation needs one image per ring variable");
    for (const auto& img : images)
        require_same_ring(ring, img.ring(), "derivation images");

    Derivation d;
    d.algebra_ = std::move(algebra);
    d.images_.reserve(images.size());
    for (auto& img : images) d.images_.push_back(d.algebra_.reduce(img, cfg));

    for (const auto& g : d.algebra_.defining_ideal().generators()) {
        Polynomial dg(ring);
        for (std::size_t v = 0; v < ring->size(); ++v)
            dg = dg + partial_derivative(g, static_cast<int>(v)) * d.images_[v];
        if (!d.algebra_.is_zero_element(dg, cfg))
            throw PreconditionError("derivation is not well defined: the relation "
                                    + g.to_string() + " maps to " + dg.to_string()
                                    + " outside the defining ideal");
    }
    return d;
}

Polynomial derive(const Derivation& D, const Polynomial& a, const EngineConfig& cfg) {
    const RingPtr& ring = D.algebra().ring();
    require_same_ring(ring, a.ring(), "derive");
    Polynomial out(ring);
    for (std::size_t v = 0; v < ring->size(); ++v) {
        if (D.images()[v].is_zero()) continue;
        Polynomial pd = partial_derivative(a, static_cast<int>(v));
        if (pd.is_zero()) continue;
        out = out + pd * D.images()[v];
    }
    return D.algebra().reduce(out, cfg);
}

bool kernel_member(const Derivation& D, const Polynomial& a, const EngineConfig& cfg) {
    return derive(D, a, cfg).is_zero();
}

namespace {

// Chain a, D(a), D^2(a), ...; returns the degree if zero is reached
// within the bound, -1 otherwise.
int chain_degree(const Derivation& D, Polynomial a, int bound, const EngineConfig& cfg) {
    a = D.algebra().reduce(a, cfg);
    if (a.is_zero()) return -1;
    for (int k = 0; k <= bound; ++k) {
        Polynomial next = derive(D, a, cfg);
        if (next.is_zero()) return k;
        a = std::move(next);
    }
    return -1;
}

} // namespace

NilpotencyVerdict lnd_check(const Derivation& D, int bound, const EngineConfig& cfg) {
    if (bound <= 0) bound = cfg.derivation_bound;
    const RingPtr& ring = D.algebra().ring();

    NilpotencyVerdict verdict;
    verdict.bound = bound;
    std::vector<std::size_t> unresolved;
    for (std::size_t v = 0; v < ring->size(); ++v) {
        Polynomial gen = Polynomial::variable(ring, static_cast<int>(v));
        Polynomial reduced = D.algebra().reduce(gen, cfg);
        if (reduced.is_zero()) {
            verdict.generator_degrees.push_back({ring->name(v), 0});
            continue;
        }
        int deg = chain_degree(D, reduced, bound, cfg);
        if (deg >= 0)
            verdict.generator_degrees.push_back({ring->name(v), deg});
        else
            unresolved.push_back(v);
    }
    if (unresolved.empty()) {
        verdict.status = NilpotencyVerdict::Status::NilpotentCertified;
        return verdict;
    }
    for (std::size_t v : unresolved) {
        Polynomial gen = Polynomial::variable(ring, static_cast<int>(v));
        Polynomial img = derive(D, gen, cfg);
        if (img.is_zero()) continue;
        Ideal divisibility = D.algebra().defining_ideal().with_extra({gen});
        if (membership(img, divisibility, cfg)) {
            verdict.status = NilpotencyVerdict::Status::NotNilpotent;
            verdict.witness = NilpotencyWitness{ring->name(v), gen, img};
            verdict.generator_degrees.clear();
            return verdict;
        }
    }
    verdict.status = NilpotencyVerdict::Status::Inconclusive;
    verdict.generator_degrees.clear();
    return verdict;
}

DegreeReport derivation_degree(const Derivation& D, const Polynomial& a, int bound,
                               const EngineConfig& cfg) {
    if (bound <= 0) bound = cfg.derivation_bound;
    Polynomial reduced = D.algebra().reduce(a, cfg);
    if (reduced.is_zero())
        throw PreconditionError("the degree of the zero element is undefined");
    int deg = chain_degree(D, reduced, bound, cfg);
    if (deg < 0)
        throw ResourceError("derivation chain did not terminate within the bound "
                            + std::to_string(bound));
    return DegreeReport{a, deg};
}

Polynomial exp_action(const Derivation& D, const std::string& t_name, const Polynomial& a,
                      int bound, const EngineConfig& cfg) {
    if (bound <= 0) bound = cfg.derivation_bound;
    const RingPtr& ring = D.algebra().ring();
    require_same_ring(ring, a.ring(), "exp_action");
    RingPtr ext = ring->extended({t_name});
    Polynomial t = Polynomial::variable(ext, ext->index_checked(t_name));

    Polynomial acc(ext);
    Polynomial cur = D.algebra().reduce(a, cfg);
    Rational factorial(1);
    Polynomial tpow = Polynomial::constant(ext, Rational(1));
    for (int k = 0;; ++k) {
        if (cur.is_zero()) return acc;
        if (k > bound)
            throw ResourceError("exp_action chain did not terminate within the bound "
                                + std::to_string(bound));
        if (k > 0) factorial *= k;
        acc = acc + lift_to_ring(cur, ext) * tpow * Rational(1 / factorial);
        cur = derive(D, cur, cfg);
        tpow = tpow * t;
    }
}

Derivation jacobian_derivation(const GradedPresentation& gp, const Polynomial& a1,
                               const Polynomial& a2, const EngineConfig& cfg) {
    const RingPtr& ring = gp.source.ring();
    const auto& relations = gp.graded.generators();
    if (relations.size() + 3 != ring->size())
        throw PreconditionError("jacobian_derivation expects a presentation with "
                                "exactly three coordinates besides the tower variables");
    require_same_ring(ring, a1.ring(), "jacobian_derivation");
    require_same_ring(ring, a2.ring(), "jacobian_derivation");

    std::vector<int> all_vars(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) all_vars[i] = static_cast<int>(i);

    PresentedAlgebra graded_algebra(ring, gp.graded, cfg);
    std::vector<Polynomial> images;
    images.reserve(ring->size());
    std::vector<Polynomial> rows = relations;
    rows.push_back(a1);
    rows.push_back(a2);
    rows.push_back(Polynomial(ring)); // replaced per generator
    for (std::size_t v = 0; v < ring->size(); ++v) {
        rows.back() = Polynomial::variable(ring, static_cast<int>(v));
        images.push_back(jacobian_determinant(rows, all_vars));
    }
    return Derivation::make(std::move(graded_algebra), std::move(images), cfg);
}

} // namespace affinemod
