#include "affinemod/weights.hpp"

#include <sstream>

#include "affinemod/errors.hpp"

namespace affinemod {

WeightVector WeightVector::zero(std::size_t levels) {
    return WeightVector(std::vector<long long>(levels, 0));
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    if (c_.size() != o.c_.size())
        throw PreconditionError("weight vector level mismatch");
    std::vector<long long> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return WeightVector(std::move(r));
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
    if (c_.size() != o.c_.size())
        throw PreconditionError("weight vector level mismatch");
    std::vector<long long> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return WeightVector(std::move(r));
}

WeightVector WeightVector::operator*(long long k) const {
    std::vector<long long> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return WeightVector(std::move(r));
}

int WeightVector::compare(const WeightVector& o) const {
    if (c_.size() != o.c_.size())
        throw PreconditionError("weight vector level mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return -1;
        if (c_[i] > o.c_[i]) return 1;
    }
    return 0;
}

bool WeightVector::is_zero() const {
    for (long long v : c_)
        if (v != 0) return false;
    return true;
}

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

WeightFunction::WeightFunction(RingPtr ring, std::vector<WeightVector> per_var)
    : ring_(std::move(ring)), per_var_(std::move(per_var)) {
    if (!ring_ || per_var_.size() != ring_->size())
        throw PreconditionError("weight function must assign one vector per variable");
    levels_ = per_var_.empty() ? 0 : per_var_[0].levels();
    for (const auto& w : per_var_)
        if (w.levels() != levels_)
            throw PreconditionError("weight vectors must share the level count");
}

WeightVector WeightFunction::of_monomial(const Monomial& m) const {
    WeightVector acc = WeightVector::zero(levels_);
    for (const auto& [v, e] : m.entries())
        acc = acc + per_var_[v] * e;
    return acc;
}

WeightFunction WeightFunction::transported(const RingPtr& target) const {
    std::vector<WeightVector> per(target->size(), WeightVector::zero(levels_));
    for (std::size_t i = 0; i < target->size(); ++i) {
        int src = ring_->index(target->name(i));
        if (src >= 0) per[i] = per_var_[src];
    }
    return WeightFunction(target, std::move(per));
}

std::vector<std::vector<long long>> WeightFunction::matrix() const {
    std::vector<std::vector<long long>> rows(levels_, std::vector<long long>(ring_->size(), 0));
    for (std::size_t v = 0; v < ring_->size(); ++v)
        for (std::size_t r = 0; r < levels_; ++r)
            rows[r][v] = per_var_[v].level(r);
    return rows;
}

std::string WeightFunction::to_string() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
        if (v) os << " ";
        os << ring_->name(v) << ":" << per_var_[v].to_string();
    }
    return os.str();
}

} // namespace affinemod
