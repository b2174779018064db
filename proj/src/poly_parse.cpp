#include "affinemod/poly_parse.hpp"

#include <cctype>

#include "affinemod/errors.hpp"

namespace affinemod {

namespace {

struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial syntax error at offset " + std::to_string(pos)
                         + ": " + what + " in \"" + s + "\"", 0, static_cast<int>(pos));
    }

    bool starts_factor(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_'
            || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    Polynomial parse_expr() {
        Polynomial acc(ring);
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = (c == '-');
            ++pos;
        }
        acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Polynomial t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_power();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                Polynomial f = parse_power();
                if (c == '*') {
                    acc = acc * f;
                } else {
                    if (!f.is_constant() || f.is_zero())
                        fail("division only by a nonzero constant");
                    acc = acc * Rational(1 / f.constant_term());
                }
            } else if (starts_factor(c)) {
                acc = acc * parse_power(); // juxtaposition
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected a non-negative integer exponent after '^'");
            unsigned long e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<unsigned long>(s[pos] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos;
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits.push_back(s[pos++]);
            return Polynomial::constant(ring, rational_from_string(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size()
                   && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name.push_back(s[pos++]);
            int idx = ring->index(name);
            if (idx < 0) fail("unknown variable '" + name + "' in ring " + ring->to_string());
            return Polynomial::variable(ring, idx);
        }
        fail("expected a factor");
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyParser p{ring, text};
    if (p.eof())
        throw ParseError("empty polynomial text", 0, 0);
    Polynomial r = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

} // namespace affinemod
