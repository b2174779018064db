#ifndef AFFINEMOD_MONOMIAL_HPP
#define AFFINEMOD_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affinemod/ring.hpp"

namespace affinemod {

// Sparse power product: (variable index, exponent) pairs sorted by
// variable index, exponents strictly positive. The empty product is 1.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    static Monomial variable(int var, int exp = 1);
    static Monomial from_dense(const std::vector<int>& exps);

    bool is_one() const { return entries_.empty(); }
    int deg(int var) const;
    long total_degree() const;
    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o) == false direction: (*this)/o, caller ensures o | *this.
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Fixed canonical order used for term storage; independent of any
    // monomial order chosen for Groebner runs.
    bool canonical_less(const Monomial& o) const;

    std::string to_string(const Ring& ring) const;

private:
    std::vector<Entry> entries_;
};

struct MonomialCanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.canonical_less(b);
    }
};

} // namespace affinemod

#endif
