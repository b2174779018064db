#ifndef AFFINEMOD_ERRORS_HPP
#define AFFINEMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affinemod {

// Base class for all library errors. Subclasses map onto the CLI exit
// classes: parse = 2, precondition = 3, resource = 4, internal = 5.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::string msg, int line, int col)
        : Error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured budget (basis size, reduction steps, chain length, ...)
// was exhausted. Never a silent wrong answer.
class ResourceError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace affinemod

#endif
