#pragma once

#include <stdexcept>
#include <string>

namespace heffter {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};
struct ZeroEntryError : Error {
    using Error::Error;
};
struct OverlapError : Error {
    using Error::Error;
};
struct OutOfBoundsError : Error {
    using Error::Error;
};
struct ParamMismatchError : Error {
    using Error::Error;
};
struct BadRelativeParamsError : Error {
    using Error::Error;
};
struct NotDiagonalError : Error {
    using Error::Error;
};
// Raised if the reduction cell map ever hits an occupied target cell.
// Cannot happen for valid inputs; kept as a hard failure, never swallowed.
struct CollisionError : Error {
    using Error::Error;
};
struct BadParamError : Error {
    using Error::Error;
};
struct NotShiftableError : Error {
    using Error::Error;
};
struct BadConstraintsError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Requested parameters fall outside every construction this library
// implements. The message names the nearest open case.
struct NotCoveredError : Error {
    using Error::Error;
};

// An external ingredient array could not be resolved from fixtures,
// registered files or search. The message lists the attempted sources.
struct IngredientUnavailableError : Error {
    using Error::Error;
};

}  // namespace heffter
