#ifndef HORNCODE_ERRORS_HPP
#define HORNCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace horncode {

// Base for all library-specific failures.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division or inversion with a zero operand.
class DivisionByZero : public Error {
   public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

// Mixing elements of different field instances.
class FieldMismatch : public Error {
   public:
    explicit FieldMismatch(const std::string& what = "operands belong to different fields") : Error(what) {}
};

// A configured enumeration bound was exceeded; use a smaller instance.
class ExhaustionLimit : public Error {
   public:
    explicit ExhaustionLimit(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
   public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace horncode

#endif
