#include "aronson/transform.hpp"

#include <algorithm>
#include <limits>

#include "aronson/engine.hpp"

namespace aronson {

GeneratedSequence aronson_transform(const MembershipOracle& beta, Term n0, std::size_t count) {
    RuleSpec rule{beta, Mode::iff, true, n0, {}, WindowKind::none};
    auto seq = generate_monotone_iff(rule, count);
    return GeneratedSequence(n0, std::vector<Term>(seq.terms().begin(), seq.terms().end()),
                             Provenance{"aronson_transform(" + beta.name()
                                            + ",n0=" + std::to_string(n0) + ")",
                                        true});
}

namespace {

void append_interval(std::vector<std::pair<Term, Term>>& row, Term lo, Term hi) {
    if (lo > hi) return;
    if (!row.empty() && row.back().second + 1 == lo) {
        row.back().second = hi;
        return;
    }
    row.emplace_back(lo, hi);
}

}  // namespace

void InverseTableState::append_hot(Term lo, Term hi) { append_interval(hot_row, lo, hi); }
void InverseTableState::append_cold(Term lo, Term hi) { append_interval(cold_row, lo, hi); }

InverseTableState inverse_table(const GeneratedSequence& alpha, Term want_hot) {
    if (!alpha.provenance().monotone)
        throw NonMonotoneInput("inverse Aronson transform requires an increasing sequence");
    InverseTableState st;
    const Term n0 = alpha.n0();
    st.largest_mentioned = n0 - 1;
    Term hot_total = 0;
    for (Term n = n0; n <= alpha.last_index(); ++n) {
        Term an = alpha.at(n);
        bool member = alpha.contains_value(n);
        // alpha(n) goes into the hot row when n is in alpha, else the cold
        // row; the numbers skipped since the last column fill the other slot,
        // except that n itself goes cold when it heads the fill.
        Term l = st.largest_mentioned;
        if (member) {
            st.append_hot(an, an);
            hot_total += 1;
            st.append_cold(l + 1, an - 1);
        } else {
            if (l + 1 <= an - 1 && l == n - 1) {
                st.append_cold(n, n);
                st.append_hot(n + 1, an - 1);
                hot_total += an - 1 - n;
            } else {
                st.append_hot(l + 1, an - 1);
                hot_total += std::max<Term>(0, an - 1 - l);
            }
            st.append_cold(an, an);
        }
        st.largest_mentioned = an;
        if (hot_total >= want_hot) break;
    }
    return st;
}

GeneratedSequence inverse_aronson(const GeneratedSequence& alpha, std::size_t count) {
    auto st = inverse_table(alpha, static_cast<Term>(count));
    std::vector<Term> beta;
    beta.reserve(count);
    for (auto& [lo, hi] : st.hot_row) {
        for (Term v = lo; v <= hi && beta.size() < count; ++v) beta.push_back(v);
        if (beta.size() >= count) break;
    }
    if (beta.size() < count)
        throw HorizonExceeded("alpha prefix of " + std::to_string(alpha.size())
                              + " terms yields only " + std::to_string(beta.size())
                              + " inverse-transform values");
    return GeneratedSequence(alpha.n0(), std::move(beta),
                             Provenance{"inverse_aronson(" + alpha.provenance().generator + ")",
                                        true});
}

MembershipOracle inverse_aronson_oracle(const GeneratedSequence& alpha) {
    // Consume the whole prefix: afterwards every integer in
    // [n0, largest_mentioned] sits in exactly one row.
    auto st = inverse_table(alpha, std::numeric_limits<Term>::max());
    return MembershipOracle::from_intervals(
        std::move(st.hot_row), alpha.n0(), st.largest_mentioned,
        "inverse_aronson(" + alpha.provenance().generator + ")");
}

GeneratedSequence sequence_square(const GeneratedSequence& s) {
    std::vector<Term> out;
    for (Term n = s.n0(); n <= s.last_index(); ++n) {
        Term inner = s.at(n);
        if (!s.in_range(inner)) break;
        out.push_back(s.at(inner));
    }
    return GeneratedSequence(s.n0(), std::move(out),
                             Provenance{"square(" + s.provenance().generator + ")",
                                        s.provenance().monotone});
}

GeneratedSequence sequence_square(const GeneratedSequence& s, std::size_t count) {
    auto sq = sequence_square(s);
    if (sq.size() < count)
        throw HorizonExceeded("sequence prefix supports only " + std::to_string(sq.size())
                              + " square terms");
    std::vector<Term> out(sq.terms().begin(), sq.terms().begin() + static_cast<long>(count));
    return GeneratedSequence(sq.n0(), std::move(out), sq.provenance());
}

}  // namespace aronson
