#pragma once

#include <stdexcept>
#include <string>

namespace storyeval {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecodeError : Error { using Error::Error; };
struct UnsupportedFormat : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct EmptyContour : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct IndefiniteMatrix : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NegativeInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnknownCandidate : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ManifestParseError : Error { using Error::Error; };
struct FileError : Error { using Error::Error; };
struct WriteError : Error { using Error::Error; };

} // namespace storyeval
