#include "affinemod/order.hpp"

#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

namespace {

std::vector<int> dense(const Monomial& m, std::size_t n) {
    std::vector<int> e(n, 0);
    for (const auto& [v, x] : m.entries()) e[static_cast<std::size_t>(v)] = x;
    return e;
}

} // namespace

MonomialOrder MonomialOrder::lex(const RingPtr& ring) {
    MonomialOrder o(ring, "lex");
    o.steps_.push_back({Component::LexAll, {}, {}});
    return o;
}

MonomialOrder MonomialOrder::degrevlex(const RingPtr& ring) {
    MonomialOrder o(ring, "degrevlex");
    o.steps_.push_back({Component::BlockDegree, {}, std::vector<char>(ring->size(), 1)});
    o.steps_.push_back({Component::RevLexAll, {}, {}});
    return o;
}

MonomialOrder MonomialOrder::elimination(const RingPtr& ring, const std::vector<int>& drop) {
    std::vector<char> in_drop(ring->size(), 0);
    for (int v : drop) {
        if (v < 0 || static_cast<std::size_t>(v) >= ring->size())
            throw PreconditionError("elimination variable out of range");
        in_drop[static_cast<std::size_t>(v)] = 1;
    }
    std::ostringstream key;
    key << "elim";
    for (std::size_t i = 0; i < in_drop.size(); ++i)
        if (in_drop[i]) key << ":" << i;
    MonomialOrder o(ring, key.str());
    o.steps_.push_back({Component::BlockDegree, {}, in_drop});
    o.steps_.push_back({Component::BlockDegree, {}, std::vector<char>(ring->size(), 1)});
    o.steps_.push_back({Component::RevLexAll, {}, {}});
    return o;
}

MonomialOrder MonomialOrder::weight_first(const WeightFunction& w) {
    const RingPtr& ring = w.ring();
    std::ostringstream key;
    key << "wfirst";
    MonomialOrder o(ring, "");
    for (const auto& row : w.matrix()) {
        o.steps_.push_back({Component::WeightRow, row, {}});
        for (long long x : row) key << ":" << x;
    }
    o.steps_.push_back({Component::BlockDegree, {}, std::vector<char>(ring->size(), 1)});
    o.steps_.push_back({Component::RevLexAll, {}, {}});
    o.key_ = key.str();
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return 0;
    const std::size_t n = ring_->size();
    std::vector<int> ea = dense(a, n), eb = dense(b, n);
    for (const auto& step : steps_) {
        switch (step.kind) {
        case Component::WeightRow: {
            long long wa = 0, wb = 0;
            for (std::size_t i = 0; i < n; ++i) {
                wa += step.row[i] * ea[i];
                wb += step.row[i] * eb[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            break;
        }
        case Component::BlockDegree: {
            long da = 0, db = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (step.block[i]) { da += ea[i]; db += eb[i]; }
            }
            if (da != db) return da < db ? -1 : 1;
            break;
        }
        case Component::LexAll:
            for (std::size_t i = 0; i < n; ++i)
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
            break;
        case Component::RevLexAll:
            // a > b iff the last nonzero entry of a-b is negative.
            for (std::size_t i = n; i-- > 0;)
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
            break;
        }
    }
    return 0;
}

bool MonomialOrder::is_global() const {
    Monomial one;
    for (std::size_t i = 0; i < ring_->size(); ++i)
        if (compare(Monomial::variable(static_cast<int>(i)), one) <= 0)
            return false;
    return true;
}

} // namespace affinemod
