#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "aronson/oracle.hpp"
#include "aronson/sequence.hpp"

namespace aronson {

// How the defining condition couples index membership to the value class:
//   iff          "n is in the sequence if and only if s(n) is in beta"
//   only_if      "n is in the sequence only if s(n) is in beta"
//   if_          "n is in the sequence if s(n) is in beta"
//   negated_iff  the iff condition must be false, i.e. iff over the complement
enum class Mode { iff, only_if, if_, negated_iff };

// Conditions over a pair of adjacent terms (window width 1). Each kind is
// generated with the discipline that reproduces its published terms:
//   odd_after_even_backward  "n in q iff q(n) is odd and q(n-1) is even"
//     members take odd values after an even predecessor, non-members take
//     even values; the missing left neighbour of the first term counts as
//     even. (A079255)
//   both_odd_forward         "n in q iff q(n) and q(n+1) are both odd"
//     generated with a parity-obligation ledger over future indexes.
//     (A079259)
enum class WindowKind { none, odd_after_even_backward, both_odd_forward };

struct RuleSpec {
    MembershipOracle oracle;
    Mode mode = Mode::iff;
    bool monotone = true;
    Term n0 = 1;
    // Forced initial terms. They are placed verbatim (the published seeded
    // sequences deliberately break the condition at a seeded index), so only
    // ordering is validated.
    std::vector<Term> seed_terms;
    WindowKind window = WindowKind::none;
};

// The greedy "smallest value > s(n-1) consistent with the condition" rule.
// Without seeds this is exactly the Aronson transform of the oracle.
GeneratedSequence generate_monotone_iff(const RuleSpec& rule, std::size_t count);

// Increment stepper for the odd-rule sequence a(n) in its settled regime
// (n >= 3, a(n-1) > n): a(n) = a(n-1) + 1 or + 2 depending on the parity of
// a(n-1) and on whether n is a member.
Term step_epsilon(Term prev, bool n_in_sequence);

// "smallest positive integer not already in the sequence" variant; keeps a
// write-once IN/OUT ledger of membership obligations. (A079313)
GeneratedSequence generate_nonmonotone(const RuleSpec& rule, std::size_t count);

// The lying rule: the iff condition must be false; delegates to the iff
// generator over the complemented oracle.
GeneratedSequence generate_negated(const RuleSpec& rule, std::size_t count);

// One-directional implications (mode only_if / if_).
GeneratedSequence generate_one_directional(const RuleSpec& rule, std::size_t count);

// Window conditions of width 1 (WindowKind above).
GeneratedSequence generate_windowed(const RuleSpec& rule, std::size_t count);

// Dispatch on rule.mode / rule.window / rule.monotone.
GeneratedSequence generate(const RuleSpec& rule, std::size_t count);

// Per-integer membership state used by the non-monotone generator.
class StatusLedger {
  public:
    enum Status : signed char { undecided = 0, in = 1, out = -1 };

    Status status(Term x) const;
    // Write-once: changing a decided status throws Contradiction.
    void mark(Term x, Status s);

  private:
    std::unordered_map<Term, signed char> states_;
};

}  // namespace aronson
