#pragma once

#include <stdexcept>

namespace iqlat {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d is not one of the nine square-free values with class number one.
struct UnsupportedFieldError : Error { using Error::Error; };

// Exact arithmetic would leave the 128-bit coordinate range.
struct OverflowError : Error { using Error::Error; };

// arg_class is undefined on the zero element.
struct ZeroElementError : Error { using Error::Error; };

// classify_prime was handed a composite (or 0/1).
struct NotPrimeError : Error { using Error::Error; };

// Bulk sweep request exceeds the configured resource bound.
struct CapacityExceededError : Error { using Error::Error; };

// Design strength is meaningless on an empty shell.
struct EmptyShellError : Error { using Error::Error; };

// Operation requires a split prime.
struct NotSplitError : Error { using Error::Error; };

// Input outside the domain of the analytic product formula.
struct DomainError : Error { using Error::Error; };

} // namespace iqlat
