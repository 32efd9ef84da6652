#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aronson {

// Sequence values and indexes. Nonnegative, 64-bit; all arithmetic that can
// grow (closed forms, constraint propagation) goes through the checked
// helpers below and aborts with OverflowError instead of wrapping.
using Term = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    using Error::Error;
};

// Query past the materialized prefix of a finite-horizon oracle or sequence.
struct HorizonExceeded : Error {
    using Error::Error;
};

struct UnknownSequence : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    using Error::Error;
};

// No value satisfies the constraints at some index (constraint solver).
struct Contradiction : Error {
    using Error::Error;
};

// Forced initial terms are malformed (not increasing, below the domain start).
struct ContradictionAtStart : Error {
    using Error::Error;
};

// Bounded candidate search exhausted (non-monotone generator).
struct NoCandidate : Error {
    using Error::Error;
};

// Bounded candidate search exhausted (windowed generator).
struct BacktrackExhausted : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct NonMonotoneInput : Error {
    using Error::Error;
};

// A morphism was applied to a letter without a rule.
struct MissingRule : Error {
    using Error::Error;
};

// Malformed b-file.
struct FormatError : Error {
    using Error::Error;
};

Term checked_add(Term a, Term b);
Term checked_sub(Term a, Term b);
Term checked_mul(Term a, Term b);

// base^exp with overflow checking; exp small (segment decompositions).
Term checked_pow(Term base, unsigned exp);

// floor(sqrt(x)), exact for all x >= 0.
Term isqrt(Term x);

// floor(n * phi), phi the golden ratio, in integer arithmetic only:
// floor(n*phi) = n + (isqrt(5 n^2) - n) / 2 using 128-bit intermediates.
Term floor_phi(Term n);

}  // namespace aronson
