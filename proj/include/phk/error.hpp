#pragma once

#include <stdexcept>
#include <string>

namespace phk {

/* Base class for all engine errors. */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Mixing scalars (or containers) over different fields. */
struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/* Shape disagreement between operands. */
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/* An operation was called before its prerequisites were verified
   (e.g. building a smash product from an unchecked action). */
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/* Input data is internally inconsistent with the structure it claims to
   carry (bad unit, integral space of the wrong dimension, and so on). */
struct StructuralError : Error {
    explicit StructuralError(const std::string& what) : Error(what) {}
};

/* Two independently computed quantities that are provably equal came out
   different. This always indicates an engine bug and is reported loudly. */
struct TheoremViolationError : Error {
    explicit TheoremViolationError(const std::string& what) : Error(what) {}
};

/* Malformed or semantically invalid input file. */
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace phk
