#ifndef AFFINEMOD_ORDER_HPP
#define AFFINEMOD_ORDER_HPP

#include <string>
#include <vector>

#include "affinemod/monomial.hpp"
#include "affinemod/ring.hpp"
#include "affinemod/weights.hpp"

namespace affinemod {

// Total multiplicative monomial order built from comparison components
// evaluated in sequence: integer weight rows, block total degrees, and a
// final lex or revlex tie-break. Covers lex, degrevlex, elimination block
// orders and weight-first orders with one representation.
class MonomialOrder {
public:
    enum class Component { WeightRow, BlockDegree, LexAll, RevLexAll };

    static MonomialOrder lex(const RingPtr& ring);
    static MonomialOrder degrevlex(const RingPtr& ring);
    // Eliminates `drop`: any monomial containing a dropped variable is
    // larger than any monomial in the remaining ones.
    static MonomialOrder elimination(const RingPtr& ring, const std::vector<int>& drop);
    // Weight rows first (lexicographic levels of w), then degrevlex.
    static MonomialOrder weight_first(const WeightFunction& w);

    const RingPtr& ring() const { return ring_; }

    int compare(const Monomial& a, const Monomial& b) const; // -1, 0, 1
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // True when every variable exceeds 1; Buchberger terminates
    // unconditionally only for such orders.
    bool is_global() const;

    // Stable identity for per-ideal basis caching.
    const std::string& key() const { return key_; }

private:
    MonomialOrder(RingPtr ring, std::string key) : ring_(std::move(ring)), key_(std::move(key)) {}
    struct Step {
        Component kind;
        std::vector<long long> row;   // WeightRow
        std::vector<char> block;      // BlockDegree membership mask
    };
    RingPtr ring_;
    std::vector<Step> steps_;
    std::string key_;
};

} // namespace affinemod

#endif
