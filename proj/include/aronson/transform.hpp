#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "aronson/oracle.hpp"
#include "aronson/sequence.hpp"

namespace aronson {

// The Aronson transform of beta: the unique increasing alpha with
// "n is in alpha iff alpha(n) is in beta". Requires beta and its complement
// to be infinite at the queried horizon.
GeneratedSequence aronson_transform(const MembershipOracle& beta, Term n0, std::size_t count);

// Row state of the inverse-transform table: hot and cold intervals partition
// [n0, largest_mentioned] with no overlap.
struct InverseTableState {
    std::vector<std::pair<Term, Term>> hot_row;   // closed intervals, ascending
    std::vector<std::pair<Term, Term>> cold_row;
    Term largest_mentioned = 0;                   // l_n

    void append_hot(Term lo, Term hi);
    void append_cold(Term lo, Term hi);
};

// Consume columns alpha(n0), alpha(n0+1), ... until the hot row holds at
// least `want_hot` values (or the prefix is exhausted).
InverseTableState inverse_table(const GeneratedSequence& alpha, Term want_hot);

// The inverse Aronson transform: the unique beta whose transform is alpha.
// Throws NonMonotoneInput if alpha is not strictly increasing and
// HorizonExceeded if alpha's prefix cannot yield `count` values.
GeneratedSequence inverse_aronson(const GeneratedSequence& alpha, std::size_t count);

// Membership oracle for the inverse transform, valid up to the horizon
// reachable from alpha's materialized prefix.
MembershipOracle inverse_aronson_oracle(const GeneratedSequence& alpha);

// The square s(s(n)) for n from s.n0() while the inner value stays inside
// the materialized prefix.
GeneratedSequence sequence_square(const GeneratedSequence& s);

// As above but exactly `count` terms; throws HorizonExceeded if the prefix
// cannot support them.
GeneratedSequence sequence_square(const GeneratedSequence& s, std::size_t count);

}  // namespace aronson
