#pragma once

#include <stdexcept>
#include <string>

namespace cl2 {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient was NaN or infinite at construction time.
struct InvalidValueError : Error {
    using Error::Error;
};

/// Inversion (or a negative power) of an element with I ~ 0.
struct NonInvertibleError : Error {
    using Error::Error;
};

/// The zero element was passed where a polar form is required.
struct ZeroElementError : Error {
    using Error::Error;
};

/// Root degree below 2, or a negative degree where only naturals apply.
struct BadExponentError : Error {
    using Error::Error;
};

/// A closed-form evaluation left the range of double.
struct OverflowError : Error {
    using Error::Error;
};

/// Malformed JSON payload: bad structure, missing/extra keys, non-finite numbers.
struct DecodeError : Error {
    using Error::Error;
};

}  // namespace cl2
