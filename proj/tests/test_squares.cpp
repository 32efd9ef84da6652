#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "aronson/closedform.hpp"
#include "aronson/squares.hpp"

using namespace aronson;

namespace {

std::vector<Term> vec(const GeneratedSequence& s) {
    return {s.terms().begin(), s.terms().end()};
}

// Exhaustive oracle: the lexicographically least monotone prefix
// s(n0..n0+len-1) with values <= vmax that is consistent with
// s(s(n)) = y*n + z. Consistency of a partial assignment: strict order, the
// constraint where both sides are inside the prefix, and joint
// order-embeddability of all implied far pairs (s(n), y*n+z).
std::optional<std::vector<Term>> brute_lex_least(Term y, Term z, Term n0, int len, Term vmax) {
    std::vector<Term> vals;
    std::optional<std::vector<Term>> best;

    auto consistent = [&]() {
        int k = static_cast<int>(vals.size());
        std::vector<std::pair<Term, Term>> pairs;  // (index, value), known + implied
        for (int i = 0; i < k; ++i) pairs.emplace_back(n0 + i, vals[i]);
        for (int i = 0; i < k; ++i) {
            Term n = n0 + i, v = vals[i];
            if (v >= n0 && v < n0 + k) {
                if (vals[static_cast<std::size_t>(v - n0)] != y * n + z) return false;
            } else {
                pairs.emplace_back(v, y * n + z);  // s(v) forced later
            }
        }
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 1; i < pairs.size(); ++i) {
            auto [i1, v1] = pairs[i - 1];
            auto [i2, v2] = pairs[i];
            if (i1 == i2) {
                if (v1 != v2) return false;
                continue;
            }
            if (v2 <= v1) return false;
            if (v2 - v1 < i2 - i1) return false;  // no room for intermediates
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> void {
        if (best) return;
        if (static_cast<int>(vals.size()) == len) {
            best = vals;
            return;
        }
        Term lo = vals.empty() ? n0 : vals.back() + 1;
        for (Term v = lo; v <= vmax; ++v) {
            vals.push_back(v);
            if (consistent()) self(self);
            vals.pop_back();
            if (best) return;
        }
    };
    dfs(dfs);
    return best;
}

}  // namespace

TEST_CASE("solver reproduces the seeded instances") {
    CHECK(vec(solve_square({2, 3, 1, {{1, 1}, {2, 4}, {3, 6}}, 2}, 12))
          == std::vector<Term>{1, 4, 6, 7, 8, 9, 11, 13, 15, 16, 17, 18});
    CHECK(vec(solve_square({2, 3, 1, {{1, 1}}, 2}, 10))
          == std::vector<Term>{1, 4, 5, 7, 9, 10, 11, 12, 13, 15});
    CHECK(vec(solve_square({3, 0, 1, {}, 1}, 10))
          == std::vector<Term>{2, 3, 6, 7, 8, 9, 12, 15, 18, 19});
    CHECK(vec(solve_square({4, 0, 0, {}, 0}, 10))
          == std::vector<Term>{0, 2, 4, 5, 8, 12, 13, 14, 16, 17});
    CHECK(vec(solve_square({4, 3, 0, {}, 0}, 10))
          == std::vector<Term>{1, 3, 4, 7, 11, 12, 13, 15, 16, 17});
    CHECK(vec(solve_square({2, 0, 2, {{2, 3}}, 2}, 10))
          == std::vector<Term>{3, 4, 6, 7, 8, 10, 12, 13, 14, 15});
}

TEST_CASE("mod-family sequences") {
    CHECK(vec(mod_family_sequence(2, 1, 10))
          == std::vector<Term>{2, 3, 5, 6, 7, 9, 11, 12, 13, 14});
    CHECK(vec(mod_family_sequence(3, 0, 10))
          == std::vector<Term>{2, 3, 6, 7, 8, 9, 12, 15, 18, 19});
    CHECK(mod_family_sequence(5, 2, 1).at(1) == 4);  // f(1) = (y+z+1)/2
}

TEST_CASE("mod-family parameter validation") {
    CHECK_THROWS_AS(mod_family_sequence(2, 2, 5), InvalidParameters);   // equal parity
    CHECK_THROWS_AS(mod_family_sequence(1, 2, 5), InvalidParameters);   // y < 2
    CHECK_THROWS_AS(mod_family_sequence(2, -1, 5), InvalidParameters);  // 2y+z < 4
    CHECK_THROWS_AS(solve_square({2, 0, 1, {}, 1}, 5), InvalidParameters);
    CHECK_NOTHROW(solve_square({4, 0, 0, {}, 0}, 5));  // whitelisted fake evens
}

TEST_CASE("defining constraint holds wherever both applications are in range") {
    auto check_constraint = [](const GeneratedSequence& s, Term y, Term z, Term first) {
        for (Term n = first; n <= s.last_index(); ++n) {
            Term v = s.at(n);
            if (!s.in_range(v)) continue;
            REQUIRE(s.at(v) == y * n + z);
        }
    };
    check_constraint(solve_square({4, 0, 0, {}, 0}, 3000), 4, 0, 0);
    check_constraint(solve_square({4, 3, 0, {}, 0}, 3000), 4, 3, 0);
    check_constraint(solve_square({2, 3, 1, {{1, 1}, {2, 4}, {3, 6}}, 2}, 3000), 2, 3, 2);
    check_constraint(mod_family_sequence(7, 4, 3000), 7, 4, 1);
}

TEST_CASE("solver equals the closed forms on a long prefix") {
    auto ap = solve_square({2, 3, 1, {{1, 1}}, 2}, 100000);
    for (Term n = 1; n <= 100000; ++n) REQUIRE(ap.at(n) == a_prime_closed(n));
    auto g = mod_family_sequence(2, 1, 100000);
    for (Term n = 1; n <= 100000; ++n) REQUIRE(g.at(n) == g_closed(n));
}

TEST_CASE("lexicographic minimality against the exhaustive oracle") {
    // fake evens: first 12 indexes, values bounded by 60
    auto brute = brute_lex_least(4, 0, 0, 12, 60);
    REQUIRE(brute.has_value());
    auto solver = vec(solve_square({4, 0, 0, {}, 0}, 12));
    CHECK(*brute == solver);

    // fake odds and the two mod-2 instances
    brute = brute_lex_least(4, 3, 0, 12, 60);
    REQUIRE(brute.has_value());
    CHECK(*brute == vec(solve_square({4, 3, 0, {}, 0}, 12)));

    brute = brute_lex_least(3, 0, 1, 10, 40);
    REQUIRE(brute.has_value());
    CHECK(*brute == vec(solve_square({3, 0, 1, {}, 1}, 10)));

    brute = brute_lex_least(2, 1, 1, 10, 40);
    REQUIRE(brute.has_value());
    CHECK(*brute == vec(mod_family_sequence(2, 1, 10)));
}

TEST_CASE("contradictory seeds are rejected") {
    CHECK_THROWS_AS(solve_square({2, 3, 1, {{1, 1}, {2, 3}}, 2}, 5), ContradictionAtStart);
    // s(1)=2 forces s(2)=5, clashing with a seed s(2)=6
    CHECK_THROWS_AS(solve_square({2, 3, 1, {{1, 2}, {2, 6}}, 1}, 5), ContradictionAtStart);
}

TEST_CASE("shift identities between the mod-4 instances") {
    auto i = solve_square({4, 0, 0, {}, 0}, 2000);
    auto ip = solve_square({4, 3, 0, {}, 0}, 1999);
    for (Term n = 0; n <= 1998; ++n) REQUIRE(ip.at(n) == i.at(n + 1) - 1);
}
