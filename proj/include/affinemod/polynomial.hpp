#ifndef AFFINEMOD_POLYNOMIAL_HPP
#define AFFINEMOD_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "affinemod/monomial.hpp"
#include "affinemod/rational.hpp"
#include "affinemod/ring.hpp"
#include "affinemod/weights.hpp"

namespace affinemod {

// Sparse multivariate polynomial over Q in canonical form: no zero
// coefficients stored, one term per monomial. Immutable in spirit; all
// operations return fresh values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialCanonicalLess>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, const Rational& c);

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, int var);
    static Polynomial monomial(const RingPtr& ring, const Monomial& m,
                               const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const; // -1 for the zero polynomial
    // Degree in a single variable; -1 for the zero polynomial.
    long degree_in(int var) const;
    bool uses_variable(int var) const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned long e) const;

    void add_term(const Monomial& m, const Rational& c); // keeps canonical form

    std::string to_string() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// --- calculus -------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& p, int var);
Polynomial partial_derivative(const Polynomial& p, const std::string& var);

// Determinant of the (ps x vs) matrix of partials, expanded symbolically
// by cofactors along the first column.
Polynomial jacobian_determinant(const std::vector<Polynomial>& ps,
                                const std::vector<int>& vars);

// --- weight machinery ------------------------------------------------------

// Maximum of the monomial weights, lexicographic. Throws on zero input.
WeightVector weight_degree(const Polynomial& p, const WeightFunction& w);

// Sum of the terms of maximal weight degree; d-homogeneous by construction.
Polynomial principal_component(const Polynomial& p, const WeightFunction& w);

bool is_weight_homogeneous(const Polynomial& p, const WeightFunction& w);

// --- gcd / squarefree -------------------------------------------------------

// Exact division; throws InternalError when the division is not exact.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);
bool try_exact_div(const Polynomial& p, const Polynomial& d, Polynomial* out);

// Primitive-PRS gcd over Q[x1..xn], normalized to unit leading coefficient
// in the canonical term order.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, dp/dx1, ..., dp/dxn). Throws on zero input.
Polynomial squarefree_part(const Polynomial& p);

// --- ring transport ---------------------------------------------------------

// Maps variables by name into a ring containing all of them.
Polynomial lift_to_ring(const Polynomial& p, const RingPtr& target);

// Same, but errors if p uses a variable absent from target.
Polynomial restrict_to_ring(const Polynomial& p, const RingPtr& target);

// Ring homomorphism determined by images of the source variables.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      const std::vector<Polynomial>& images);

} // namespace affinemod

#endif
