#include "affinemod/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

const EngineConfig& default_config() {
    static EngineConfig cfg = [] {
        EngineConfig c;
        if (const char* s = std::getenv("AFFINEMOD_CAP_GROEBNER")) {
            long v = std::atol(s);
            if (v > 0) c.max_reduction_steps = static_cast<std::size_t>(v);
        }
        if (const char* s = std::getenv("AFFINEMOD_CAP_CHAIN")) {
            long v = std::atol(s);
            if (v > 0) c.largest_ideal_cap = static_cast<int>(v);
        }
        return c;
    }();
    return cfg;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(ring_, g.ring(), "ideal construction");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::with_extra(const std::vector<Polynomial>& more) const {
    std::vector<Polynomial> gens = gens_;
    for (const auto& g : more)
        if (!g.is_zero()) gens.push_back(g);
    return Ideal(ring_, std::move(gens));
}

std::vector<std::string> Ideal::generator_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
}

// ---------------------------------------------------------------------------
// division
// ---------------------------------------------------------------------------

namespace {

struct Term {
    Monomial mon;
    Rational coeff;
};

Term leading_term(const Polynomial& p, const MonomialOrder& ord) {
    auto it = p.terms().begin();
    const Monomial* best = &it->first;
    const Rational* coeff = &it->second;
    for (++it; it != p.terms().end(); ++it) {
        if (ord.less(*best, it->first)) {
            best = &it->first;
            coeff = &it->second;
        }
    }
    return {*best, *coeff};
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    Term lt = leading_term(p, ord);
    return p * Rational(1 / lt.coeff);
}

void charge(std::size_t& steps, const EngineConfig& cfg) {
    if (++steps > cfg.max_reduction_steps)
        throw ResourceError("reduction step budget exceeded ("
                            + std::to_string(cfg.max_reduction_steps)
                            + "); raise the groebner cap if the input is expected to be this large");
}

long ecart(const Polynomial& p, const MonomialOrder& ord) {
    return p.total_degree() - leading_term(p, ord).mon.total_degree();
}

} // namespace

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, const EngineConfig& cfg,
                       std::vector<Polynomial>* quotients) {
    const RingPtr& ring = p.ring();
    if (quotients) quotients->assign(basis.size(), Polynomial(ring));
    std::vector<Term> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) lts.push_back(leading_term(g, ord));

    Polynomial rem(ring);
    Polynomial h = p;
    std::size_t steps = 0;
    while (!h.is_zero()) {
        Term lt = leading_term(h, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!lts[i].mon.divides(lt.mon)) continue;
            Monomial qm = lt.mon.divided_by(lts[i].mon);
            Rational qc = lt.coeff / lts[i].coeff;
            Polynomial factor = Polynomial::monomial(ring, qm, qc);
            h = h - basis[i] * factor;
            if (quotients) (*quotients)[i] = (*quotients)[i] + factor;
            reduced = true;
            break;
        }
        if (!reduced) {
            h.add_term(lt.mon, -lt.coeff);
            rem.add_term(lt.mon, lt.coeff);
        }
        charge(steps, cfg);
    }
    return rem;
}

Polynomial reduce_plain(const Polynomial& p, const std::vector<Polynomial>& basis,
                        const MonomialOrder& ord, const EngineConfig& cfg) {
    return reduce_full(p, basis, ord, cfg, nullptr);
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const Term& ltf, const Term& ltg) {
    Monomial l = Monomial::lcm(ltf.mon, ltg.mon);
    Polynomial mf = Polynomial::monomial(f.ring(), l.divided_by(ltf.mon), Rational(1 / ltf.coeff));
    Polynomial mg = Polynomial::monomial(g.ring(), l.divided_by(ltg.mon), Rational(1 / ltg.coeff));
    return f * mf - g * mg;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long sugar;
};

struct PairQueue {
    // Sugar strategy: smallest sugar first, then smaller lcm degree,
    // then indices for determinism.
    static bool later(const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar > b.sugar;
        long da = a.lcm.total_degree(), db = b.lcm.total_degree();
        if (da != db) return da > db;
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    }
    std::vector<Pair> heap;
    void push(Pair p) {
        heap.push_back(std::move(p));
        std::push_heap(heap.begin(), heap.end(), later);
    }
    Pair pop() {
        std::pop_heap(heap.begin(), heap.end(), later);
        Pair p = std::move(heap.back());
        heap.pop_back();
        return p;
    }
    bool empty() const { return heap.empty(); }
};

struct BasisBuilder {
    const MonomialOrder& ord;
    const EngineConfig& cfg;
    bool global;

    std::vector<Polynomial> basis;
    std::vector<Term> lts;
    std::vector<long> sugars;
    PairQueue queue;
    std::set<std::pair<std::size_t, std::size_t>> done;

    void add_element(Polynomial g, long sugar) {
        g = make_monic(g, ord);
        std::size_t t = basis.size();
        if (t + 1 > cfg.max_basis_size)
            throw ResourceError("basis size budget exceeded ("
                                + std::to_string(cfg.max_basis_size) + ")");
        Term lt = leading_term(g, ord);
        for (std::size_t i = 0; i < t; ++i) {
            Pair p{i, t, Monomial::lcm(lts[i].mon, lt.mon), 0};
            long si = sugars[i] + p.lcm.divided_by(lts[i].mon).total_degree();
            long st = sugar + p.lcm.divided_by(lt.mon).total_degree();
            p.sugar = std::max(si, st);
            queue.push(std::move(p));
        }
        basis.push_back(std::move(g));
        lts.push_back(std::move(lt));
        sugars.push_back(sugar);
    }

    bool chain_criterion(const Pair& p) const {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lts[k].mon.divides(p.lcm)) continue;
            auto key_ik = std::minmax(p.i, k);
            auto key_jk = std::minmax(p.j, k);
            if (done.count({key_ik.first, key_ik.second})
                && done.count({key_jk.first, key_jk.second})
                && Monomial::lcm(lts[p.i].mon, lts[k].mon) != p.lcm
                && Monomial::lcm(lts[p.j].mon, lts[k].mon) != p.lcm)
                return true;
        }
        return false;
    }

    Polynomial normal_form(const Polynomial& p, long sugar);

    void run(std::vector<Polynomial> gens) {
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const Polynomial& g) { return g.is_zero(); }),
                   gens.end());
        std::sort(gens.begin(), gens.end(), [this](const Polynomial& a, const Polynomial& b) {
            return ord.less(leading_term(a, ord).mon, leading_term(b, ord).mon);
        });
        for (auto& g : gens) {
            long sugar = g.total_degree();
            add_element(std::move(g), sugar);
        }
        while (!queue.empty()) {
            Pair p = queue.pop();
            done.insert({p.i, p.j});
            if (lts[p.i].mon.coprime_with(lts[p.j].mon)) continue; // product criterion
            if (chain_criterion(p)) continue;
            Polynomial s = s_polynomial(basis[p.i], basis[p.j], lts[p.i], lts[p.j]);
            if (s.is_zero()) continue;
            Polynomial r = normal_form(s, p.sugar);
            if (!r.is_zero()) add_element(std::move(r), p.sugar);
        }
    }
};

Polynomial BasisBuilder::normal_form(const Polynomial& p, long sugar) {
    (void)sugar;
    if (global) return reduce_full(p, basis, ord, cfg, nullptr);

    // Mora weak normal form: reducers may include earlier partial
    // remainders; picks the reducer of minimal ecart.
    std::vector<Polynomial> T = basis;
    std::vector<Term> tl = lts;
    std::vector<long> te;
    te.reserve(T.size());
    for (const auto& g : T) te.push_back(ecart(g, ord));

    Polynomial h = p;
    std::size_t steps = 0;
    while (!h.is_zero()) {
        Term lt = leading_term(h, ord);
        long eh = h.total_degree() - lt.mon.total_degree();
        std::size_t pick = T.size();
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!tl[i].mon.divides(lt.mon)) continue;
            if (pick == T.size() || te[i] < te[pick]) pick = i;
        }
        if (pick == T.size()) return h;
        if (te[pick] > eh) {
            T.push_back(h);
            tl.push_back(lt);
            te.push_back(eh);
        }
        Monomial qm = lt.mon.divided_by(tl[pick].mon);
        Rational qc = lt.coeff / tl[pick].coeff;
        h = h - T[pick] * Polynomial::monomial(h.ring(), qm, qc);
        charge(steps, cfg);
    }
    return h;
}

std::vector<Polynomial> minimalize(std::vector<Polynomial> basis, const MonomialOrder& ord) {
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(leading_term(g, ord).mon);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == i || !lms[k].divides(lms[i])) continue;
            if (lms[k] == lms[i] && k > i) continue; // keep the first of equals
            redundant = true;
            break;
        }
        if (!redundant) out.push_back(basis[i]);
    }
    return out;
}

} // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                   const EngineConfig& cfg) {
    if (!ord.is_global())
        throw PreconditionError("buchberger requires a well-order; "
                                "use standard_basis for initial-forms-only work");
    BasisBuilder b{ord, cfg, true, {}, {}, {}, {}, {}};
    b.run(std::move(gens));
    std::vector<Polynomial> basis = minimalize(std::move(b.basis), ord);
    // Inter-reduce for the unique reduced basis.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(basis.size() - 1);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (k != i) others.push_back(basis[k]);
        Polynomial r = reduce_full(basis[i], others, ord, cfg, nullptr);
        if (!r.is_zero()) reduced.push_back(make_monic(r, ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_term(a, ord).mon, leading_term(b, ord).mon);
    });
    return reduced;
}

std::vector<Polynomial> standard_basis(std::vector<Polynomial> gens, const MonomialOrder& ord,
                                       const EngineConfig& cfg) {
    BasisBuilder b{ord, cfg, ord.is_global(), {}, {}, {}, {}, {}};
    b.run(std::move(gens));
    std::vector<Polynomial> basis = minimalize(std::move(b.basis), ord);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& p) {
        return ord.less(leading_term(a, ord).mon, leading_term(p, ord).mon);
    });
    return basis;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord,
                                               const EngineConfig& cfg) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord.key());
    if (it != cache_->bases.end()) return it->second;
    std::vector<Polynomial> basis = buchberger(gens_, ord, cfg);
    // Cache invariant: the basis generates the same ideal. Each returned
    // element was produced from the generators, and every generator must
    // reduce to zero against the basis.
    for (const auto& g : gens_) {
        if (!reduce_full(g, basis, ord, cfg, nullptr).is_zero())
            throw InternalError("groebner cache verification failed");
    }
    auto [pos, fresh] = cache_->bases.emplace(ord.key(), std::move(basis));
    (void)fresh;
    return pos->second;
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const EngineConfig& cfg) {
    return I.groebner(ord, cfg);
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, const MonomialOrder& ord,
                       const EngineConfig& cfg) {
    require_same_ring(p.ring(), I.ring(), "normal_form");
    if (!I.has_generators()) return p;
    return reduce_full(p, I.groebner(ord, cfg), ord, cfg, nullptr);
}

bool membership(const Polynomial& p, const Ideal& I, const EngineConfig& cfg) {
    if (p.is_zero()) return true;
    if (!I.has_generators()) return false;
    return normal_form(p, I, MonomialOrder::degrevlex(I.ring()), cfg).is_zero();
}

std::optional<MembershipCertificate> membership_certificate(const Polynomial& p, const Ideal& I,
                                                            const EngineConfig& cfg) {
    if (!I.has_generators())
        return p.is_zero() ? std::optional<MembershipCertificate>(MembershipCertificate{})
                           : std::nullopt;
    MonomialOrder ord = MonomialOrder::degrevlex(I.ring());
    const auto& basis = I.groebner(ord, cfg);
    MembershipCertificate cert;
    cert.basis = basis;
    Polynomial r = reduce_full(p, basis, ord, cfg, &cert.cofactors);
    if (!r.is_zero()) return std::nullopt;
    return cert;
}

bool is_unit_ideal(const Ideal& I, const EngineConfig& cfg) {
    if (!I.has_generators()) return false;
    const auto& basis = I.groebner(MonomialOrder::degrevlex(I.ring()), cfg);
    return basis.size() == 1 && basis[0].is_one();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const EngineConfig& cfg) {
    require_same_ring(I.ring(), J.ring(), "ideal_equal");
    for (const auto& g : I.generators())
        if (!membership(g, J, cfg)) return false;
    for (const auto& g : J.generators())
        if (!membership(g, I, cfg)) return false;
    return true;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop, const EngineConfig& cfg) {
    if (drop.empty()) return I;
    if (!I.has_generators()) return I;
    std::vector<char> dropped(I.ring()->size(), 0);
    for (int v : drop) dropped.at(static_cast<std::size_t>(v)) = 1;
    MonomialOrder ord = MonomialOrder::elimination(I.ring(), drop);
    const auto& basis = I.groebner(ord, cfg);
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        bool uses_dropped = false;
        for (std::size_t v = 0; v < dropped.size() && !uses_dropped; ++v)
            if (dropped[v] && g.uses_variable(static_cast<int>(v))) uses_dropped = true;
        if (!uses_dropped) kept.push_back(g);
    }
    return Ideal(I.ring(), std::move(kept));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const EngineConfig& cfg) {
    std::vector<int> idx;
    idx.reserve(drop.size());
    for (const auto& n : drop) idx.push_back(I.ring()->index_checked(n));
    return eliminate(I, idx, cfg);
}

namespace {

std::string fresh_name(const RingPtr& ring, const std::string& base) {
    if (ring->index(base) < 0) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (ring->index(cand) < 0) return cand;
    }
}

} // namespace

Ideal colon_ideal(const Ideal& I, const Polynomial& f, const EngineConfig& cfg) {
    require_same_ring(I.ring(), f.ring(), "colon_ideal");
    if (f.is_zero())
        throw PreconditionError("colon by the zero polynomial");
    if (!I.has_generators()) return I;
    // (I : f) = (I intersect (f)) / f, intersection via the tag variable.
    std::string tname = fresh_name(I.ring(), "@t");
    RingPtr ext = I.ring()->extended({tname});
    int t = ext->index(tname);
    Polynomial tp = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - tp;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(lift_to_ring(g, ext) * tp);
    gens.push_back(lift_to_ring(f, ext) * one_minus_t);
    Ideal J(ext, std::move(gens));
    Ideal inter = eliminate(J, std::vector<int>{t}, cfg);
    std::vector<Polynomial> out;
    for (const auto& g : inter.generators()) {
        Polynomial base = restrict_to_ring(g, I.ring());
        out.push_back(exact_div(base, f));
    }
    return Ideal(I.ring(), std::move(out));
}

int dimension(const Ideal& I, const EngineConfig& cfg) {
    const std::size_t n = I.ring()->size();
    if (!I.has_generators()) return static_cast<int>(n);
    if (is_unit_ideal(I, cfg)) return -1;
    if (n > 24)
        throw ResourceError("dimension computation limited to 24 variables");
    const auto& basis = I.groebner(MonomialOrder::degrevlex(I.ring()), cfg);
    MonomialOrder ord = MonomialOrder::degrevlex(I.ring());
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(leading_term(g, ord).mon);

    // A variable set S is independent iff no leading monomial is
    // supported inside S; the dimension is the largest such |S|.
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        int size = __builtin_popcountl(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (const auto& [v, e] : m.entries()) {
                if (!((mask >> v) & 1ul)) { inside = false; break; }
            }
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_product");
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            gens.push_back(a * b);
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, int m) {
    if (m < 1)
        throw PreconditionError("ideal_power needs a positive exponent");
    Ideal acc = I;
    for (int i = 1; i < m; ++i) acc = ideal_product(acc, I);
    return acc;
}

} // namespace affinemod
