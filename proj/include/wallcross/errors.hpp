#ifndef WALLCROSS_ERRORS_HPP
#define WALLCROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wallcross {

// Operands built over different ModelSpecs.
class ModelMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (unit series without unit part,
// negative index, malformed data).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numeric wall data that does not describe a wall.
class InvalidWallError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation exists only for some values of l_zeta.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed user input (JSON schema, CLI arguments).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace wallcross

#endif
