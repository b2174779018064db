#ifndef AFFINEMOD_RING_HPP
#define AFFINEMOD_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "affinemod/errors.hpp"

namespace affinemod {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An ordered list of variable names over Q. Rings are immutable and
// shared; two rings are the same ring iff their variable lists agree.
class Ring {
public:
    static RingPtr make(std::vector<std::string> vars);

    std::size_t size() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& names() const { return vars_; }

    // -1 when the name is not a variable of this ring.
    int index(const std::string& name) const;
    int index_checked(const std::string& name) const;

    bool same(const Ring& other) const { return vars_ == other.vars_; }

    // New ring with extra variables appended; names must be fresh.
    RingPtr extended(const std::vector<std::string>& extra) const;

    std::string to_string() const;

private:
    explicit Ring(std::vector<std::string> vars);
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same(*b));
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

} // namespace affinemod

#endif
