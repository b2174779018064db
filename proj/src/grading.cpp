#include "affinemod/grading.hpp"

#include <numeric>

#include "affinemod/errors.hpp"

namespace affinemod {

RingPtr convention_ring(int m, const std::vector<int>& block_sizes) {
    if (m < 1)
        throw PreconditionError("the tower needs at least one equation");
    std::vector<std::string> names{"x", "y", "z"};
    for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
    for (std::size_t j = 0; j < block_sizes.size(); ++j)
        for (int i = 1; i <= block_sizes[j]; ++i)
            names.push_back("u" + std::to_string(j + 1) + "_" + std::to_string(i));
    return Ring::make(std::move(names));
}

ConventionWeights convention51_weights(int k, int l, const std::vector<int>& exponents,
                                       const std::vector<std::vector<int>>& block_exponents,
                                       long degree_bound,
                                       std::optional<long long> e_override) {
    if (l < 2 || k <= l)
        throw PreconditionError("need k > l >= 2");
    if (std::gcd(k, l) != 1)
        throw PreconditionError("need gcd(k, l) = 1");
    for (int n : exponents)
        if (n < 1) throw PreconditionError("tower exponents must be positive");
    for (const auto& blk : block_exponents)
        for (int n : blk)
            if (n < 1) throw PreconditionError("block exponents must be positive");
    if (degree_bound < 1) degree_bound = 1;

    const int m = static_cast<int>(exponents.size()) + 1;
    std::vector<int> block_sizes;
    for (const auto& blk : block_exponents)
        block_sizes.push_back(static_cast<int>(blk.size()) + 1);
    RingPtr ring = convention_ring(m, block_sizes);

    const long long a = 1;
    long long e = e_override.value_or(static_cast<long long>(degree_bound) * k * l);
    if (e < static_cast<long long>(degree_bound) * k * l)
        throw PreconditionError("the weight magnitude e is below the degree bound "
                                + std::to_string(degree_bound * k * l));

    std::vector<WeightVector> per(ring->size(), WeightVector::zero(2));
    auto set = [&](const std::string& name, long long lvl0, long long lvl1) {
        per[static_cast<std::size_t>(ring->index_checked(name))] =
            WeightVector({lvl0, lvl1});
    };
    set("y", l * a, 0);
    set("z", k * a, 0);
    set("x", -e, 1);
    set("v1", static_cast<long long>(k) * l * a + e, -1);
    for (int i = 1; i < m; ++i) {
        const WeightVector& di = per[static_cast<std::size_t>(
            ring->index_checked("v" + std::to_string(i)))];
        const WeightVector& dx = per[static_cast<std::size_t>(ring->index_checked("x"))];
        per[static_cast<std::size_t>(ring->index_checked("v" + std::to_string(i + 1)))] =
            di * exponents[static_cast<std::size_t>(i - 1)] - dx;
    }
    for (std::size_t j = 0; j < block_exponents.size(); ++j) {
        set("u" + std::to_string(j + 1) + "_1",
            static_cast<long long>(j + 2) * e, 1);
        for (std::size_t i = 0; i < block_exponents[j].size(); ++i) {
            const WeightVector& dji = per[static_cast<std::size_t>(ring->index_checked(
                "u" + std::to_string(j + 1) + "_" + std::to_string(i + 1)))];
            const WeightVector& dx = per[static_cast<std::size_t>(ring->index_checked("x"))];
            per[static_cast<std::size_t>(ring->index_checked(
                "u" + std::to_string(j + 1) + "_" + std::to_string(i + 2)))] =
                dji * block_exponents[j][i] - dx;
        }
    }

    WeightFunction w(ring, per);

    // The construction is checked, not trusted.
    auto of = [&](const std::string& n) { return per[(std::size_t)ring->index_checked(n)]; };
    if (of("y") * k != of("z") * l)
        throw InternalError("weight constraint k*d_y = l*d_z violated");
    if (of("v1") + of("x") != of("y") * k)
        throw InternalError("weight constraint d_1 + d_x = k*d_y violated");
    if (!of("x").is_negative() || !(of("v1") > of("y")) || !(of("y") > WeightVector::zero(2)))
        throw InternalError("weight sign constraints violated");
    for (int i = 1; i < m; ++i)
        if (of("x") + of("v" + std::to_string(i + 1))
            != of("v" + std::to_string(i)) * exponents[(std::size_t)(i - 1)])
            throw InternalError("weight recursion for the tower violated");
    for (std::size_t j = 0; j < block_exponents.size(); ++j)
        for (std::size_t i = 0; i < block_exponents[j].size(); ++i)
            if (of("x") + of("u" + std::to_string(j + 1) + "_" + std::to_string(i + 2))
                != of("u" + std::to_string(j + 1) + "_" + std::to_string(i + 1))
                       * block_exponents[j][i])
                throw InternalError("weight recursion for an extra block violated");

    ConventionWeights out;
    out.weights = std::move(w);
    out.e = e;
    out.degree_bound = degree_bound;
    return out;
}

GradedPresentation graded_ideal(const PresentedAlgebra& pres, const WeightFunction& w,
                                const EngineConfig& cfg) {
    WeightFunction wr = same_ring(w.ring(), pres.ring()) ? w : w.transported(pres.ring());
    MonomialOrder ord = MonomialOrder::weight_first(wr);

    GradedPresentation out;
    out.source = pres;
    out.weights = wr;
    out.weight_basis = standard_basis(pres.defining_ideal().generators(), ord, cfg);

    std::vector<Polynomial> tops;
    tops.reserve(out.weight_basis.size());
    for (const auto& g : out.weight_basis)
        tops.push_back(principal_component(g, wr));
    out.graded = Ideal(pres.ring(), std::move(tops));

    // The principal component of every original generator must land in
    // the graded ideal; anything else means the basis is not standard.
    for (const auto& g : pres.defining_ideal().generators())
        if (!membership(principal_component(g, wr), out.graded, cfg))
            throw InternalError("graded ideal postcondition failed for generator "
                                + g.to_string());

    out.status = out.graded.has_generators()
                     && is_regular_sequence(out.graded.generators(),
                                            PresentedAlgebra::free_algebra(pres.ring()), cfg)
                     ? CertStatus::RegularSequenceCertified
                     : CertStatus::Unverified;
    return out;
}

namespace {

Polynomial minimal_representative(const Polynomial& a, const GradedPresentation& gp,
                                  const EngineConfig& cfg) {
    require_same_ring(a.ring(), gp.source.ring(), "gr_element");
    MonomialOrder ord = MonomialOrder::weight_first(gp.weights);
    Polynomial h = reduce_full(a, gp.weight_basis, ord, cfg, nullptr);
    if (h.is_zero())
        throw PreconditionError("the element is zero in the algebra; gr is undefined");
    return h;
}

} // namespace

Polynomial gr_element(const Polynomial& a, const GradedPresentation& gp,
                      const EngineConfig& cfg) {
    Polynomial h = minimal_representative(a, gp, cfg);
    Polynomial top = principal_component(h, gp.weights);
    if (membership(top, gp.graded, cfg))
        throw InternalError("gr_element returned a representative inside the graded ideal");
    return top;
}

WeightVector algebra_weight_degree(const Polynomial& a, const GradedPresentation& gp,
                                   const EngineConfig& cfg) {
    return weight_degree(minimal_representative(a, gp, cfg), gp.weights);
}

bool algebraically_dependent(const GradedPresentation& gp, const Polynomial& a,
                             const Polynomial& b, const EngineConfig& cfg) {
    const RingPtr& ring = gp.source.ring();
    RingPtr ext = ring->extended({"@s", "@u"});
    Polynomial s = Polynomial::variable(ext, ext->index_checked("@s"));
    Polynomial u = Polynomial::variable(ext, ext->index_checked("@u"));
    std::vector<Polynomial> gens;
    for (const auto& g : gp.graded.generators())
        gens.push_back(lift_to_ring(g, ext));
    gens.push_back(s - lift_to_ring(a, ext));
    gens.push_back(u - lift_to_ring(b, ext));
    std::vector<int> drop;
    for (std::size_t i = 0; i < ring->size(); ++i)
        drop.push_back(ext->index_checked(ring->name(i)));
    Ideal relations = eliminate(Ideal(ext, std::move(gens)), drop, cfg);
    return relations.has_generators();
}

std::vector<Candidate> homogeneous_irreducible_candidates(const GradedPresentation& gp,
                                                          int k, int l, int m) {
    const RingPtr& ring = gp.source.ring();
    for (const char* base : {"x", "y", "z"})
        if (ring->index(base) < 0)
            throw PreconditionError("candidate enumeration expects the family coordinates");
    for (int i = 1; i <= m; ++i)
        if (ring->index("v" + std::to_string(i)) < 0)
            throw PreconditionError("candidate enumeration expects v1..vm in the ring");

    std::vector<Candidate> out;
    auto var = [&](const std::string& n) {
        return Polynomial::variable(ring, ring->index_checked(n));
    };
    out.push_back({Candidate::Kind::X, 0, "x", var("x")});
    out.push_back({Candidate::Kind::Y, 0, "y", var("y")});
    out.push_back({Candidate::Kind::Z, 0, "z", var("z")});
    for (int i = 1; i <= m; ++i)
        out.push_back({Candidate::Kind::V, i, "v" + std::to_string(i),
                       var("v" + std::to_string(i))});
    Polynomial pencil = var("y").pow(static_cast<unsigned long>(k))
                      + var("z").pow(static_cast<unsigned long>(l));
    out.push_back({Candidate::Kind::PencilYZ, 0,
                   "y^" + std::to_string(k) + " + c*z^" + std::to_string(l),
                   std::move(pencil)});
    return out;
}

} // namespace affinemod
