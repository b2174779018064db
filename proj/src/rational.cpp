#include "affinemod/rational.hpp"

#include "affinemod/errors.hpp"

namespace affinemod {

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw PreconditionError("invalid rational literal: " + text);
    if (q.get_den() == 0)
        throw PreconditionError("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace affinemod
