#ifndef AFFINEMOD_POLY_PARSE_HPP
#define AFFINEMOD_POLY_PARSE_HPP

#include <string>

#include "affinemod/polynomial.hpp"

namespace affinemod {

// Shared text syntax: `^` for powers, `*` optional between factors,
// variables are identifiers, e.g. `x*v1 - y^3 + z^2`.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace affinemod

#endif
