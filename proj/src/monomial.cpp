#include "affinemod/monomial.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

Monomial Monomial::variable(int var, int exp) {
    Monomial m;
    if (exp < 0)
        throw PreconditionError("negative exponent");
    if (exp > 0)
        m.entries_.push_back({var, exp});
    return m;
}

Monomial Monomial::from_dense(const std::vector<int>& exps) {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0)
            throw PreconditionError("negative exponent");
        if (exps[i] > 0)
            m.entries_.push_back({static_cast<int>(i), exps[i]});
    }
    return m;
}

int Monomial::deg(int var) const {
    for (const auto& [v, e] : entries_)
        if (v == var) return e;
    return 0;
}

long Monomial::total_degree() const {
    long t = 0;
    for (const auto& [v, e] : entries_) t += e;
    return t;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first < b->first) r.entries_.push_back(*a++);
        else if (b->first < a->first) r.entries_.push_back(*b++);
        else {
            r.entries_.push_back({a->first, a->second + b->second});
            ++a; ++b;
        }
    }
    r.entries_.insert(r.entries_.end(), a, entries_.end());
    r.entries_.insert(r.entries_.end(), b, o.entries_.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end()) {
        while (b != o.entries_.end() && b->first < a->first) ++b;
        if (b == o.entries_.end() || b->first != a->first || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end()) {
        if (b == o.entries_.end() || a->first < b->first) {
            r.entries_.push_back(*a++);
        } else if (a->first == b->first) {
            if (a->second < b->second)
                throw InternalError("monomial division not exact");
            if (a->second > b->second)
                r.entries_.push_back({a->first, a->second - b->second});
            ++a; ++b;
        } else {
            throw InternalError("monomial division not exact");
        }
    }
    if (b != o.entries_.end())
        throw InternalError("monomial division not exact");
    return r;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
    Monomial r;
    auto a = x.entries_.begin(), b = y.entries_.begin();
    while (a != x.entries_.end() && b != y.entries_.end()) {
        if (a->first < b->first) r.entries_.push_back(*a++);
        else if (b->first < a->first) r.entries_.push_back(*b++);
        else {
            r.entries_.push_back({a->first, std::max(a->second, b->second)});
            ++a; ++b;
        }
    }
    r.entries_.insert(r.entries_.end(), a, x.entries_.end());
    r.entries_.insert(r.entries_.end(), b, y.entries_.end());
    return r;
}

Monomial Monomial::gcd(const Monomial& x, const Monomial& y) {
    Monomial r;
    auto a = x.entries_.begin(), b = y.entries_.begin();
    while (a != x.entries_.end() && b != y.entries_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else {
            r.entries_.push_back({a->first, std::min(a->second, b->second)});
            ++a; ++b;
        }
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else return false;
    }
    return true;
}

bool Monomial::canonical_less(const Monomial& o) const {
    // Plain lex on exponent vectors: multiplicative, so the canonical
    // leading term is safe for exact division.
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
        int va = a != entries_.end() ? a->first : INT_MAX;
        int vb = b != o.entries_.end() ? b->first : INT_MAX;
        if (va != vb) return va > vb; // the other has an earlier variable
        if (a->second != b->second) return a->second < b->second;
        ++a; ++b;
    }
    return false;
}

std::string Monomial::to_string(const Ring& ring) const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : entries_) {
        if (!first) os << "*";
        first = false;
        os << ring.name(v);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

} // namespace affinemod
