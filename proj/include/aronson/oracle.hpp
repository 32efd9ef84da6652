#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aronson/sequence.hpp"
#include "aronson/types.hpp"

namespace aronson {

// A set of integers queryable by membership and by "next member / next
// non-member >= x". Builtin kinds are infinite with infinite complement;
// sequence-backed oracles answer only inside their materialized horizon and
// throw HorizonExceeded beyond it rather than guessing.
//
// Queries are logically pure. The prime oracle shares a growable sieve that
// is guarded by a mutex, so all kinds are safe for concurrent reads.
class MembershipOracle {
  public:
    bool contains(Term x) const;

    // Smallest y >= x with contains(y).
    Term next_member(Term x) const;

    // Smallest y >= x with !contains(y).
    Term next_nonmember(Term x) const;

    // First integer of the oracle's universe; queries below it are invalid.
    Term universe_start() const;

    std::string name() const;

    static MembershipOracle odds();
    static MembershipOracle evens();
    static MembershipOracle multiples(Term m);
    // { i*y + z : i >= 1 }
    static MembershipOracle residue(Term y, Term z);
    // [2, (y+z-1)/2] u { i*y + z : i >= 1 }; the interval is omitted when
    // (y+z-1)/2 <= 1. Requires y, z of opposite parity.
    static MembershipOracle mod_family_set(Term y, Term z);
    static MembershipOracle squares();
    static MembershipOracle triangular();
    static MembershipOracle primes();
    // { floor(n*phi) : n >= 1 }, membership decided in integer arithmetic.
    static MembershipOracle lower_wythoff();
    // All integers >= from. The complement is empty, so next_nonmember always
    // throws; useful as the fixed point of the Aronson transform.
    static MembershipOracle integers(Term from);
    static MembershipOracle complement(MembershipOracle inner);
    // Values of a strictly increasing materialized sequence. Queries beyond
    // the largest stored value throw HorizonExceeded.
    static MembershipOracle from_sequence(GeneratedSequence seq);
    // from_sequence over a b-file loaded from disk.
    static MembershipOracle from_bfile(const std::string& path);
    // Union of closed intervals covering [start, covered_limit]; queries
    // beyond covered_limit throw HorizonExceeded.
    static MembershipOracle from_intervals(std::vector<std::pair<Term, Term>> intervals,
                                           Term start, Term covered_limit, std::string name);

    struct Impl;

  private:
    explicit MembershipOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace aronson
