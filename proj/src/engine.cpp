#include "aronson/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace aronson {

namespace {

constexpr Term kCandidateGap = 64;  // search bound beyond the current frontier

std::string describe(const char* generator, const RuleSpec& rule) {
    std::string s = std::string(generator) + "(" + rule.oracle.name()
                    + ",n0=" + std::to_string(rule.n0);
    if (!rule.seed_terms.empty()) {
        s += ",seeds=";
        for (std::size_t i = 0; i < rule.seed_terms.size(); ++i) {
            if (i) s += ';';
            s += std::to_string(rule.seed_terms[i]);
        }
    }
    s += ")";
    return s;
}

void validate_seeds(const RuleSpec& rule) {
    Term prev = rule.n0 - 1;
    for (Term s : rule.seed_terms) {
        if (s <= prev)
            throw ContradictionAtStart("seed terms must be strictly increasing and >= n0");
        prev = s;
    }
}

}  // namespace

StatusLedger::Status StatusLedger::status(Term x) const {
    auto it = states_.find(x);
    return it == states_.end() ? undecided : static_cast<Status>(it->second);
}

void StatusLedger::mark(Term x, Status s) {
    auto [it, inserted] = states_.emplace(x, s);
    if (!inserted && it->second != s)
        throw Contradiction("status of " + std::to_string(x) + " already decided");
}

Term step_epsilon(Term prev, bool n_in_sequence) {
    bool prev_even = prev % 2 == 0;
    return prev + ((n_in_sequence == prev_even) ? 1 : 2);
}

GeneratedSequence generate_monotone_iff(const RuleSpec& rule, std::size_t count) {
    if (!rule.monotone || (rule.mode != Mode::iff && rule.mode != Mode::negated_iff))
        throw InvalidParameters("generate_monotone_iff requires monotone iff rules");
    validate_seeds(rule);
    const MembershipOracle& beta = rule.oracle;

    std::vector<Term> vals;
    vals.reserve(count);
    std::size_t cursor = 0;  // first position with vals[cursor] >= n
    std::size_t seed_i = 0;
    Term n = rule.n0;
    while (vals.size() < count) {
        Term v;
        if (seed_i < rule.seed_terms.size()) {
            v = rule.seed_terms[seed_i++];
        } else if (vals.empty() || vals.back() == n - 1) {
            // Self-referential step: choosing v = n makes n a member, which
            // is consistent exactly when n is in beta. Otherwise n can never
            // appear and the value must be the next non-member >= n+1.
            v = beta.contains(n) ? n : beta.next_nonmember(n + 1);
        } else {
            // Values have passed n, so membership of n is settled.
            while (cursor < vals.size() && vals[cursor] < n) ++cursor;
            bool member = cursor < vals.size() && vals[cursor] == n;
            Term lo = vals.back() + 1;
            v = member ? beta.next_member(lo) : beta.next_nonmember(lo);
        }
        vals.push_back(v);
        ++n;
    }
    return GeneratedSequence(rule.n0, std::move(vals),
                             Provenance{describe("monotone_iff", rule), true});
}

GeneratedSequence generate_negated(const RuleSpec& rule, std::size_t count) {
    if (!rule.monotone || rule.mode != Mode::negated_iff)
        throw InvalidParameters("generate_negated requires a monotone negated_iff rule");
    RuleSpec flipped = rule;
    flipped.oracle = MembershipOracle::complement(rule.oracle);
    flipped.mode = Mode::iff;
    auto seq = generate_monotone_iff(flipped, count);
    return GeneratedSequence(rule.n0, std::vector<Term>(seq.terms().begin(), seq.terms().end()),
                             Provenance{describe("negated_iff", rule), true});
}

GeneratedSequence generate_nonmonotone(const RuleSpec& rule, std::size_t count) {
    if (rule.monotone || rule.mode != Mode::iff)
        throw InvalidParameters("generate_nonmonotone requires a non-monotone iff rule");
    if (!rule.seed_terms.empty())
        throw InvalidParameters("non-monotone generation does not take seed terms");
    const MembershipOracle& beta = rule.oracle;

    StatusLedger ledger;
    std::set<Term> available;  // not yet used as a value, not marked out
    Term frontier = rule.n0 - 1;
    Term max_used = rule.n0 - 1;
    auto extend = [&](Term upto) {
        for (Term x = frontier + 1; x <= upto; ++x) available.insert(available.end(), x);
        frontier = std::max(frontier, upto);
    };

    std::vector<Term> vals;
    vals.reserve(count);
    for (Term n = rule.n0; vals.size() < count; ++n) {
        Term limit = std::max(max_used, n) + kCandidateGap;
        extend(limit);
        bool placed = false;
        for (auto it = available.begin(); it != available.end() && *it <= limit; ++it) {
            Term c = *it;
            bool claims_in = beta.contains(c);  // value class decides n's membership claim
            StatusLedger::Status st = ledger.status(n);
            bool ok;
            if (claims_in) {
                // n must be (or become) a member; always obligatable.
                ok = st != StatusLedger::out;
            } else {
                // n must never appear as a value; impossible if already a
                // member, or if the value IS n (using n makes it a member).
                ok = st != StatusLedger::in && c != n;
            }
            if (!ok) continue;

            ledger.mark(c, StatusLedger::in);  // c is now a value
            if (st == StatusLedger::undecided)
                ledger.mark(n, claims_in ? StatusLedger::in : StatusLedger::out);
            if (!claims_in) available.erase(n);  // n ruled out as a future value
            available.erase(it);
            max_used = std::max(max_used, c);
            vals.push_back(c);
            placed = true;
            break;
        }
        if (!placed)
            throw NoCandidate("no consistent value within gap " + std::to_string(kCandidateGap)
                              + " at index " + std::to_string(n));
    }
    return GeneratedSequence(rule.n0, std::move(vals),
                             Provenance{describe("nonmonotone_iff", rule), false});
}

GeneratedSequence generate_one_directional(const RuleSpec& rule, std::size_t count) {
    if (!rule.monotone || (rule.mode != Mode::only_if && rule.mode != Mode::if_))
        throw InvalidParameters("generate_one_directional requires mode only_if or if_");
    validate_seeds(rule);
    const MembershipOracle& beta = rule.oracle;
    const bool only_if = rule.mode == Mode::only_if;

    std::vector<Term> vals;
    vals.reserve(count);
    std::size_t cursor = 0;
    std::size_t seed_i = 0;
    Term n = rule.n0;
    while (vals.size() < count) {
        Term v;
        if (seed_i < rule.seed_terms.size()) {
            v = rule.seed_terms[seed_i++];
        } else if (vals.empty() || vals.back() == n - 1) {
            if (only_if) {
                // v = n makes n a member and requires a beta value; otherwise
                // n stays out and the implication is vacuous.
                v = beta.contains(n) ? n : n + 1;
            } else {
                // "if": v = n satisfies the implication whatever its class.
                v = n;
            }
        } else {
            while (cursor < vals.size() && vals[cursor] < n) ++cursor;
            bool member = cursor < vals.size() && vals[cursor] == n;
            Term lo = vals.back() + 1;
            if (only_if)
                v = member ? beta.next_member(lo) : lo;
            else
                v = member ? lo : beta.next_nonmember(lo);
        }
        vals.push_back(v);
        ++n;
    }
    const char* label = only_if ? "only_if" : "if";
    return GeneratedSequence(rule.n0, std::move(vals), Provenance{describe(label, rule), true});
}

namespace {

// "n in q iff q(n) odd and q(n-1) even". Members take an odd value after an
// even predecessor; non-members take an even value (the discipline that
// reproduces A079255). A candidate adjacent to an existing member is
// rejected: consecutive members would force q at the shared index to be odd
// and even at once. The virtual left neighbour of the first term is even.
GeneratedSequence windowed_backward(const RuleSpec& rule, std::size_t count) {
    std::vector<Term> vals;
    vals.reserve(count);
    std::set<Term> members;
    std::size_t cursor = 0;
    for (Term n = rule.n0; vals.size() < count; ++n) {
        Term prev = vals.empty() ? 0 : vals.back();
        Term lo = vals.empty() ? rule.n0 : prev + 1;
        bool placed = false;
        for (Term v = lo; v < lo + kCandidateGap; ++v) {
            bool member;
            if (vals.empty() || prev == n - 1) {
                member = v == n;
            } else {
                while (cursor < vals.size() && vals[cursor] < n) ++cursor;
                member = cursor < vals.size() && vals[cursor] == n;
            }
            if (members.count(v - 1)) continue;
            bool ok = member ? (v % 2 == 1 && prev % 2 == 0) : (v % 2 == 0);
            if (!ok) continue;
            vals.push_back(v);
            members.insert(v);
            placed = true;
            break;
        }
        if (!placed)
            throw BacktrackExhausted("no consistent pair within gap at index "
                                     + std::to_string(n));
    }
    return GeneratedSequence(rule.n0, std::move(vals),
                             Provenance{describe("windowed_prev", rule), true});
}

// "n in q iff q(n) and q(n+1) are both odd". Committing a value v makes v a
// member, which forces q(v) and q(v+1) odd; a decided non-member m whose
// q(m) is forced odd forces q(m+1) even. Requirements live in a
// parity-obligation ledger; a candidate that creates a conflicting
// requirement is rejected. (A079259)
GeneratedSequence windowed_forward(const RuleSpec& rule, std::size_t count) {
    enum : signed char { even_req = 0, odd_req = 1 };
    std::unordered_map<Term, signed char> forced;  // index -> required parity
    std::vector<Term> vals;
    vals.reserve(count);
    std::set<Term> members;
    std::size_t cursor = 0;

    for (Term n = rule.n0; vals.size() < count; ++n) {
        Term lo = vals.empty() ? rule.n0 : vals.back() + 1;
        Term decided_before = vals.empty() ? rule.n0 - 1 : vals.back();
        bool placed = false;
        for (Term v = lo; v < lo + kCandidateGap; ++v) {
            std::unordered_map<Term, signed char> trial;
            auto require = [&](Term idx, signed char p) {
                auto f = forced.find(idx);
                if (f != forced.end()) return f->second == p;
                auto [t, inserted] = trial.emplace(idx, p);
                return inserted ? true : t->second == p;
            };
            bool member;
            if (vals.empty() || vals.back() == n - 1) {
                member = v == n;
            } else {
                while (cursor < vals.size() && vals[cursor] < n) ++cursor;
                member = cursor < vals.size() && vals[cursor] == n;
            }
            bool ok = require(n, static_cast<signed char>(v % 2));
            if (ok && member) ok = v % 2 == 1 && require(n + 1, odd_req);
            if (ok && !member && v % 2 == 1) ok = require(n + 1, even_req);
            if (ok) ok = require(v, odd_req) && require(v + 1, odd_req);
            if (ok) {
                // integers in (decided_before, v) are now settled non-members
                for (Term m = decided_before + 1; m < v && ok; ++m) {
                    if (members.count(m)) continue;
                    auto f = forced.find(m);
                    signed char p;
                    if (f != forced.end()) p = f->second;
                    else {
                        auto t = trial.find(m);
                        if (t == trial.end()) continue;
                        p = t->second;
                    }
                    if (p == odd_req) ok = require(m + 1, even_req);
                }
            }
            if (!ok) continue;
            forced.merge(trial);
            for (auto& [idx, p] : trial)
                forced[idx] = p;  // entries merge() left behind agree by construction
            vals.push_back(v);
            members.insert(v);
            placed = true;
            break;
        }
        if (!placed)
            throw BacktrackExhausted("no consistent pair within gap at index "
                                     + std::to_string(n));
    }
    return GeneratedSequence(rule.n0, std::move(vals),
                             Provenance{describe("windowed_next", rule), true});
}

}  // namespace

GeneratedSequence generate_windowed(const RuleSpec& rule, std::size_t count) {
    if (!rule.monotone) throw InvalidParameters("windowed rules are monotone");
    switch (rule.window) {
        case WindowKind::odd_after_even_backward: return windowed_backward(rule, count);
        case WindowKind::both_odd_forward: return windowed_forward(rule, count);
        case WindowKind::none: break;
    }
    throw InvalidParameters("generate_windowed requires a window condition");
}

GeneratedSequence generate(const RuleSpec& rule, std::size_t count) {
    if (rule.window != WindowKind::none) return generate_windowed(rule, count);
    if (!rule.monotone) return generate_nonmonotone(rule, count);
    switch (rule.mode) {
        case Mode::iff: return generate_monotone_iff(rule, count);
        case Mode::negated_iff: return generate_negated(rule, count);
        case Mode::only_if:
        case Mode::if_: return generate_one_directional(rule, count);
    }
    throw InvalidParameters("unsupported rule");
}

}  // namespace aronson
