#pragma once

#include <stdexcept>
#include <string>

namespace vmosaic {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text-level problems in .vmos input (distinct from semantic problems so the
// CLI can map them to usage-style exit codes).
struct ParseError : Error {
    using Error::Error;
};
struct SyntaxError : ParseError {
    using ParseError::ParseError;
};
struct BadDimensions : ParseError {
    using ParseError::ParseError;
};
struct BadPairing : ParseError {
    using ParseError::ParseError;
};

// Tile-level misuse.
struct NotAConnectionPoint : Error {
    using Error::Error;
};
struct NotACrossingTile : Error {
    using Error::Error;
};

// Semantic/domain errors.
struct InvalidMosaic : Error {
    using Error::Error;
};
struct NoDiagram : Error {
    using Error::Error;
};
struct BadCode : Error {
    using Error::Error;
};
struct EmptyCode : Error {
    using Error::Error;
};
struct SiteOutOfRange : Error {
    using Error::Error;
};
struct NotEjectable : Error {
    using Error::Error;
};
struct NotACrossingCell : Error {
    using Error::Error;
};
struct NotAKnot : Error {
    using Error::Error;
};
struct SearchSpaceTooLarge : Error {
    using Error::Error;
};
struct NotFoundWithinBound : Error {
    using Error::Error;
};

// Fixture corpus problems (batch checking).
struct FixtureMissing : Error {
    using Error::Error;
};
struct FixtureMismatch : Error {
    using Error::Error;
};

} // namespace vmosaic
