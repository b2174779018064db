#include "affinemod/ring.hpp"

#include <sstream>

namespace affinemod {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty())
            throw PreconditionError("empty variable name");
        auto [it, fresh] = index_.emplace(vars_[i], static_cast<int>(i));
        (void)it;
        if (!fresh)
            throw PreconditionError("duplicate variable name: " + vars_[i]);
    }
}

RingPtr Ring::make(std::vector<std::string> vars) {
    return RingPtr(new Ring(std::move(vars)));
}

int Ring::index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Ring::index_checked(const std::string& name) const {
    int i = index(name);
    if (i < 0)
        throw PreconditionError("unknown variable " + name + " in ring " + to_string());
    return i;
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> vars = vars_;
    for (const auto& v : extra) {
        if (index(v) >= 0)
            throw PreconditionError("variable " + v + " already present in ring " + to_string());
        vars.push_back(v);
    }
    return make(std::move(vars));
}

std::string Ring::to_string() const {
    std::ostringstream os;
    os << "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
    }
    os << "]";
    return os.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw PreconditionError(std::string("ring mismatch in ") + where + ": "
                                + (a ? a->to_string() : "<null>") + " vs "
                                + (b ? b->to_string() : "<null>"));
}

} // namespace affinemod
