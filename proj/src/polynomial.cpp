#include "affinemod/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

Polynomial::Polynomial(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    add_term(Monomial(), c);
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    return Polynomial(ring, c);
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
    if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
        throw PreconditionError("variable index out of range");
    Polynomial p(ring);
    p.add_term(Monomial::variable(var), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m,
                                const Rational& c) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one()
        && terms_.begin()->second == 1;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

long Polynomial::degree_in(int var) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m.deg(var));
    return d;
}

bool Polynomial::uses_variable(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.deg(var) > 0) return true;
    return false;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial subtraction");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Stable human order: total degree descending, canonical order inside.
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        long da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return a->first.canonical_less(b->first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const Rational& c = t->second;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (t->first.is_one()) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << t->first.to_string(*ring_);
        }
    }
    return os.str();
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || static_cast<std::size_t>(var) >= p.ring()->size())
        throw PreconditionError("unknown variable in partial_derivative");
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        int e = m.deg(var);
        if (e == 0) continue;
        Monomial q = m.divided_by(Monomial::variable(var));
        r.add_term(q, c * e);
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
    return partial_derivative(p, p.ring()->index_checked(var));
}

Polynomial jacobian_determinant(const std::vector<Polynomial>& ps,
                                const std::vector<int>& vars) {
    if (ps.size() != vars.size())
        throw PreconditionError("jacobian_determinant needs as many polynomials as variables");
    if (ps.empty())
        throw PreconditionError("jacobian_determinant of an empty system");
    const RingPtr& ring = ps[0].ring();
    for (const auto& p : ps) require_same_ring(ring, p.ring(), "jacobian_determinant");
    const std::size_t n = ps.size();
    std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n, Polynomial(ring)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mat[i][j] = partial_derivative(ps[i], vars[j]);

    // Cofactor expansion along the first column of the active submatrix.
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    struct Rec {
        const std::vector<std::vector<Polynomial>>& m;
        const RingPtr& ring;
        Polynomial run(std::vector<std::size_t> rs, std::size_t col) {
            if (rs.size() == 1) return m[rs[0]][col];
            Polynomial acc(ring);
            for (std::size_t i = 0; i < rs.size(); ++i) {
                const Polynomial& e = m[rs[i]][col];
                if (e.is_zero()) continue;
                std::vector<std::size_t> rest;
                rest.reserve(rs.size() - 1);
                for (std::size_t k = 0; k < rs.size(); ++k)
                    if (k != i) rest.push_back(rs[k]);
                Polynomial minor = run(std::move(rest), col + 1);
                Polynomial contrib = e * minor;
                acc = (i % 2 == 0) ? acc + contrib : acc - contrib;
            }
            return acc;
        }
    } rec{mat, ring};
    return rec.run(rows, 0);
}

WeightVector weight_degree(const Polynomial& p, const WeightFunction& w) {
    if (p.is_zero())
        throw PreconditionError("weight degree of the zero polynomial is undefined");
    bool first = true;
    WeightVector best;
    for (const auto& [m, c] : p.terms()) {
        WeightVector v = w.of_monomial(m);
        if (first || v > best) { best = v; first = false; }
    }
    return best;
}

Polynomial principal_component(const Polynomial& p, const WeightFunction& w) {
    WeightVector top = weight_degree(p, w);
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms())
        if (w.of_monomial(m) == top) r.add_term(m, c);
    return r;
}

bool is_weight_homogeneous(const Polynomial& p, const WeightFunction& w) {
    if (p.is_zero()) return true;
    bool first = true;
    WeightVector ref;
    for (const auto& [m, c] : p.terms()) {
        WeightVector v = w.of_monomial(m);
        if (first) { ref = v; first = false; }
        else if (v != ref) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// gcd / exact division
// ---------------------------------------------------------------------------

namespace {

// Leading data of p viewed as univariate in `var` with polynomial
// coefficients in the remaining variables.
long lead_exp(const Polynomial& p, int var) { return p.degree_in(var); }

Polynomial coeff_at(const Polynomial& p, int var, long e) {
    Polynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        if (m.deg(var) != e) continue;
        r.add_term(e > 0 ? m.divided_by(Monomial::variable(var, static_cast<int>(e))) : m, c);
    }
    return r;
}

int top_variable(const Polynomial& p) {
    int best = -1;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.entries())
            best = std::max(best, v);
    return best;
}

// Pseudo-remainder of a by b in the variable var.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int var) {
    const long db = lead_exp(b, var);
    const Polynomial lb = coeff_at(b, var, db);
    long da = lead_exp(a, var);
    while (!a.is_zero() && da >= db) {
        Polynomial la = coeff_at(a, var, da);
        Polynomial xshift = Polynomial::monomial(
            a.ring(), Monomial::variable(var, static_cast<int>(da - db)), Rational(1));
        a = a * lb - b * (la * xshift);
        long nda = lead_exp(a, var);
        if (!a.is_zero() && nda >= da)
            throw InternalError("pseudo-division failed to reduce degree");
        da = nda;
    }
    return a;
}

Polynomial gcd_rec(Polynomial a, Polynomial b);

Polynomial content_in(const Polynomial& p, int var) {
    // gcd of the coefficients of p as a univariate polynomial in var.
    Polynomial acc(p.ring());
    for (long e = 0; e <= lead_exp(p, var); ++e) {
        Polynomial c = coeff_at(p, var, e);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c : gcd_rec(acc, c);
        if (acc.is_constant()) break;
    }
    return acc;
}

Polynomial normalize_unit(const Polynomial& p) {
    if (p.is_zero()) return p;
    // Divide by the coefficient of the canonical-largest monomial.
    const auto& last = *p.terms().rbegin();
    return p * Rational(1 / last.second);
}

Polynomial gcd_rec(Polynomial a, Polynomial b) {
    if (a.is_zero()) return normalize_unit(b);
    if (b.is_zero()) return normalize_unit(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.ring(), Rational(1));
    int var = std::max(top_variable(a), top_variable(b));
    if (lead_exp(a, var) == 0 || lead_exp(b, var) == 0) {
        // One of them does not involve the top variable: gcd divides the
        // content of the other in that variable.
        Polynomial ca = lead_exp(a, var) == 0 ? a : content_in(a, var);
        Polynomial cb = lead_exp(b, var) == 0 ? b : content_in(b, var);
        return gcd_rec(ca, cb);
    }
    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial pa = exact_div(a, ca);
    Polynomial pb = exact_div(b, cb);
    // Primitive PRS on the primitive parts.
    while (true) {
        if (lead_exp(pa, var) < lead_exp(pb, var)) std::swap(pa, pb);
        Polynomial r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        r = exact_div(r, content_in(r, var));
        pa = std::move(pb);
        pb = std::move(r);
        if (lead_exp(pb, var) == 0) {
            pb = Polynomial::constant(a.ring(), Rational(1));
            break;
        }
    }
    Polynomial cont = gcd_rec(ca, cb);
    return normalize_unit(cont * pb);
}

} // namespace

bool try_exact_div(const Polynomial& p, const Polynomial& d, Polynomial* out) {
    if (d.is_zero())
        throw PreconditionError("division by the zero polynomial");
    Polynomial rem = p;
    Polynomial quot(p.ring());
    // Leading term in the canonical order (largest key).
    const auto& dlead = *d.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!dlead.first.divides(rlead.first)) return false;
        Monomial qm = rlead.first.divided_by(dlead.first);
        Rational qc = rlead.second / dlead.second;
        quot.add_term(qm, qc);
        rem = rem - d * Polynomial::monomial(p.ring(), qm, qc);
    }
    if (out) *out = std::move(quot);
    return true;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    Polynomial q;
    if (!try_exact_div(p, d, &q))
        throw InternalError("division was expected to be exact: ("
                            + p.to_string() + ") / (" + d.to_string() + ")");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring(), b.ring(), "gcd");
    return gcd_rec(a, b);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero())
        throw PreconditionError("squarefree part of the zero polynomial");
    Polynomial g(p.ring());
    for (std::size_t v = 0; v < p.ring()->size(); ++v) {
        Polynomial dv = partial_derivative(p, static_cast<int>(v));
        if (dv.is_zero()) continue;
        g = g.is_zero() ? gcd(p, dv) : gcd(g, dv);
        if (g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) return normalize_unit(p);
    return normalize_unit(exact_div(p, g));
}

// ---------------------------------------------------------------------------
// ring transport
// ---------------------------------------------------------------------------

Polynomial lift_to_ring(const Polynomial& p, const RingPtr& target) {
    std::vector<Polynomial> images;
    images.reserve(p.ring()->size());
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        int t = target->index(p.ring()->name(i));
        if (t < 0)
            throw PreconditionError("variable " + p.ring()->name(i)
                                    + " missing from target ring " + target->to_string());
        images.push_back(Polynomial::variable(target, t));
    }
    return substitute(p, target, images);
}

Polynomial restrict_to_ring(const Polynomial& p, const RingPtr& target) {
    std::vector<Polynomial> images;
    images.reserve(p.ring()->size());
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
        int t = target->index(p.ring()->name(i));
        if (t < 0) {
            if (p.uses_variable(static_cast<int>(i)))
                throw PreconditionError("polynomial " + p.to_string() + " uses variable "
                                        + p.ring()->name(i) + " absent from "
                                        + target->to_string());
            images.push_back(Polynomial(target)); // never applied
        } else {
            images.push_back(Polynomial::variable(target, t));
        }
    }
    return substitute(p, target, images);
}

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
    if (images.size() != p.ring()->size())
        throw PreconditionError("substitute needs one image per source variable");
    Polynomial acc(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (const auto& [v, e] : m.entries())
            t = t * images[v].pow(static_cast<unsigned long>(e));
        acc = acc + t;
    }
    return acc;
}

} // namespace affinemod
