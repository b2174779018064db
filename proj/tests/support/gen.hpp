#ifndef AFFINEMOD_TESTS_GEN_HPP
#define AFFINEMOD_TESTS_GEN_HPP

#include <random>
#include <vector>

#include "affinemod/polynomial.hpp"
#include "affinemod/weights.hpp"

namespace affinemod::testgen {

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring,
                                    int max_terms = 5, int max_exp = 3,
                                    int coeff_range = 6, bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> num(-coeff_range, coeff_range);
    std::uniform_int_distribution<int> den(1, 3);
    Polynomial p(ring);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<int> exps(ring->size());
        for (auto& e : exps) e = exp(rng);
        int n = num(rng);
        if (n == 0) n = 1;
        p.add_term(Monomial::from_dense(exps), rational(n, den(rng)));
    }
    if (!allow_zero && p.is_zero())
        p.add_term(Monomial(), Rational(1));
    return p;
}

inline Polynomial random_nonzero(std::mt19937_64& rng, const RingPtr& ring,
                                 int max_terms = 5, int max_exp = 3) {
    return random_polynomial(rng, ring, max_terms, max_exp, 6, false);
}

inline WeightFunction random_weights(std::mt19937_64& rng, const RingPtr& ring,
                                     std::size_t levels = 2, long long range = 9) {
    std::uniform_int_distribution<long long> w(-range, range);
    std::vector<WeightVector> per;
    per.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
        std::vector<long long> c(levels);
        for (auto& x : c) x = w(rng);
        per.emplace_back(std::move(c));
    }
    return WeightFunction(ring, std::move(per));
}

// Independent determinant oracle: the full permutation expansion.
inline Polynomial determinant_by_permutations(const std::vector<std::vector<Polynomial>>& m,
                                              const RingPtr& ring) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Polynomial acc(ring);
    do {
        int sign = 1;
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::size_t len = 0, j = i;
            while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
            if (len % 2 == 0) sign = -sign;
        }
        Polynomial prod = Polynomial::constant(ring, Rational(sign));
        for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        acc = acc + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace affinemod::testgen

#endif
