#ifndef AFFINEMOD_WEIGHTS_HPP
#define AFFINEMOD_WEIGHTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "affinemod/monomial.hpp"
#include "affinemod/ring.hpp"

namespace affinemod {

// Integer weight tuple compared lexicographically. Tuples under lex
// order form a totally ordered group compatible with addition, which is
// all the machinery ever needs from real-valued weights.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<long long> c) : c_(std::move(c)) {}
    static WeightVector zero(std::size_t levels);

    std::size_t levels() const { return c_.size(); }
    long long level(std::size_t i) const { return c_[i]; }
    const std::vector<long long>& components() const { return c_; }

    WeightVector operator+(const WeightVector& o) const;
    WeightVector operator-(const WeightVector& o) const;
    WeightVector operator*(long long k) const;

    int compare(const WeightVector& o) const; // -1, 0, 1 lexicographic
    bool operator==(const WeightVector& o) const { return c_ == o.c_; }
    bool operator!=(const WeightVector& o) const { return c_ != o.c_; }
    bool operator<(const WeightVector& o) const { return compare(o) < 0; }
    bool operator>(const WeightVector& o) const { return compare(o) > 0; }
    bool is_zero() const;
    bool is_negative() const { return compare(zero(levels())) < 0; }

    std::string to_string() const;

private:
    std::vector<long long> c_;
};

// Per-variable weight vectors on a ring.
class WeightFunction {
public:
    WeightFunction() = default;
    WeightFunction(RingPtr ring, std::vector<WeightVector> per_var);

    const RingPtr& ring() const { return ring_; }
    std::size_t levels() const { return levels_; }
    const WeightVector& of_variable(int var) const { return per_var_[var]; }
    WeightVector of_monomial(const Monomial& m) const;

    // Same weights transported to a ring that contains a subset or
    // superset of the variables (matched by name; new variables get
    // the supplied default, zero unless given).
    WeightFunction transported(const RingPtr& target) const;

    // Integer matrix, rows = lexicographic levels, columns = variables.
    std::vector<std::vector<long long>> matrix() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t levels_ = 0;
    std::vector<WeightVector> per_var_;
};

} // namespace affinemod

#endif
