#include "aronson/registry.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "aronson/closedform.hpp"
#include "aronson/engine.hpp"
#include "aronson/squares.hpp"
#include "aronson/transform.hpp"

namespace aronson {

namespace {

std::vector<std::pair<Term, Term>> gt(Term n0, std::initializer_list<Term> vals) {
    std::vector<std::pair<Term, Term>> out;
    Term n = n0;
    for (Term v : vals) out.emplace_back(n++, v);
    return out;
}

GeneratedSequence gen_rule(MembershipOracle oracle, Mode mode, Term n0,
                           std::vector<Term> seeds, std::size_t count) {
    RuleSpec rule{std::move(oracle), mode, true, n0, std::move(seeds), WindowKind::none};
    return generate(rule, count);
}

GeneratedSequence gen_window(WindowKind w, Term n0, std::size_t count) {
    RuleSpec rule{MembershipOracle::odds(), Mode::iff, true, n0, {}, w};
    return generate_windowed(rule, count);
}

GeneratedSequence gen_closed(Term n0, Term (*fn)(Term), const char* name, bool monotone,
                             std::size_t count) {
    std::vector<Term> terms;
    terms.reserve(count);
    for (std::size_t k = 0; k < count; ++k) terms.push_back(fn(n0 + static_cast<Term>(k)));
    return GeneratedSequence(n0, std::move(terms), Provenance{name, monotone});
}

GeneratedSequence materialize_a(std::size_t count) {
    return gen_rule(MembershipOracle::odds(), Mode::iff, 1, {}, count);
}

// Aronson transform of a sequence-backed oracle; the base prefix grows until
// the requested count fits inside its value horizon.
GeneratedSequence transform_of_sequence(std::function<GeneratedSequence(std::size_t)> base,
                                        Term n0, std::size_t count) {
    for (std::size_t base_count = std::max<std::size_t>(4 * count, 64);;
         base_count *= 2) {
        try {
            auto beta = MembershipOracle::from_sequence(base(base_count));
            return aronson_transform(beta, n0, count);
        } catch (const HorizonExceeded&) {
            if (base_count > (std::size_t{1} << 28)) throw;
        }
    }
}

GeneratedSequence inverse_of(std::function<GeneratedSequence(std::size_t)> alpha, Term,
                             std::size_t count) {
    for (std::size_t alpha_count = std::max<std::size_t>(count, 64);; alpha_count *= 2) {
        try {
            return inverse_aronson(alpha(alpha_count), count);
        } catch (const HorizonExceeded&) {
            if (alpha_count > (std::size_t{1} << 28)) throw;
        }
    }
}

GeneratedSequence oracle_values(const MembershipOracle& o, Term first, std::size_t count,
                                std::string label) {
    std::vector<Term> terms;
    terms.reserve(count);
    Term x = o.next_member(first);
    while (terms.size() < count) {
        terms.push_back(x);
        x = o.next_member(x + 1);
    }
    return GeneratedSequence(1, std::move(terms), Provenance{std::move(label), true});
}

std::map<std::string, RegistryEntry> build_registry() {
    std::map<std::string, RegistryEntry> r;
    auto add = [&r](RegistryEntry e) { r.emplace(e.name, std::move(e)); };

    add({"a", "A079000", "n is in the sequence iff a(n) is odd", 1,
         [](std::size_t c) { return materialize_a(c); },
         gt(1, {1,   4,  6,  7,  8,  9,  11, 13, 15, 16, 17, 18, 19, 20, 21, 23, 25, 27,
                29,  31, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 47, 49, 51,
                53,  55, 57, 59, 61, 63, 65, 67, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78,
                79,  80, 81, 82, 83, 84, 85, 86, 87, 88, 89, 90, 91, 92, 93, 95, 97, 99})});

    add({"aprime", "A080596",
         "lexicographically least with a'(1)=1, a'(a'(n)) = 2n+3 for n >= 2", 1,
         [](std::size_t c) {
             return solve_square({2, 3, 1, {{1, 1}}, 2}, c);
         },
         gt(1, {1, 4, 5, 7, 9, 10, 11, 12, 13, 15, 17, 19, 21, 22})});

    add({"b", "A079313", "non-monotone version: n is in the sequence iff b(n) is odd", 1,
         [](std::size_t c) {
             RuleSpec rule{MembershipOracle::odds(), Mode::iff, false, 1, {}, WindowKind::none};
             return generate_nonmonotone(rule, c);
         },
         gt(1, {1, 3, 5, 2, 7, 8, 9, 11, 13, 12, 15, 17, 19, 16, 21, 23, 25, 20, 27, 29})});

    add({"c", "A079253", "n is in the sequence iff c(n) is even", 0,
         [](std::size_t c) { return gen_rule(MembershipOracle::evens(), Mode::iff, 0, {}, c); },
         gt(0, {0, 3, 5, 6, 7, 8, 10, 12, 14, 15})});

    add({"d", "A080653", "lying version: d(1)=2, then 'n in d iff d(n) odd' is false", 1,
         [](std::size_t c) {
             RuleSpec rule{MembershipOracle::odds(), Mode::negated_iff, true, 1, {2},
                           WindowKind::none};
             return generate_negated(rule, c);
         },
         gt(1, {2, 4, 5, 6, 8, 10, 11, 12, 13, 14})});

    add({"dprime", "A014132", "complement of the triangular numbers", 1,
         [](std::size_t c) { return gen_closed(1, dprime_closed, "dprime_closed", true, c); },
         gt(1, {2, 4, 5, 7, 8, 9, 11, 12, 13, 14, 16})});

    add({"e", "A003605", "n is in the sequence iff e(n) is a multiple of 3", 1,
         [](std::size_t c) {
             return gen_rule(MembershipOracle::multiples(3), Mode::iff, 1, {2}, c);
         },
         gt(1, {2, 3, 6, 7, 8, 9, 12, 15, 18, 19})});

    add({"eprime", "A006166", "e'(n) = e(n) - n", 1,
         [](std::size_t c) {
             std::vector<Term> t;
             t.reserve(c);
             for (std::size_t k = 0; k < c; ++k) {
                 Term n = 1 + static_cast<Term>(k);
                 t.push_back(e_closed(n) - n);
             }
             return GeneratedSequence(1, std::move(t), Provenance{"eprime", false});
         },
         gt(1, {1, 1, 3, 3, 3, 3, 5, 7, 9, 9})});

    add({"g", "A080637", "unique increasing g with g(1)=2, g(g(n)) = 2n+1", 1,
         [](std::size_t c) { return mod_family_sequence(2, 1, c); },
         gt(1, {2, 3, 5, 6, 7, 9, 11, 12, 13, 14})});

    add({"gprime", "A007378", "unique increasing g' on n >= 2 with g'(g'(n)) = 2n", 2,
         [](std::size_t c) {
             return solve_square({2, 0, 2, {{2, 3}}, 2}, c);
         },
         gt(2, {3, 4, 6, 7, 8, 10, 12, 13, 14, 15})});

    add({"h", "A080780", "n is in the sequence iff h(n) is a multiple of 6", 1,
         [](std::size_t c) {
             return gen_rule(MembershipOracle::multiples(6), Mode::iff, 1, {2}, c);
         },
         gt(1, {2, 6, 7, 8, 9, 12, 18, 24, 30, 31})});

    add({"i", "A080588", "fake even numbers: least increasing with i(i(n)) = 4n", 0,
         [](std::size_t c) { return solve_square({4, 0, 0, {}, 0}, c); },
         gt(0, {0, 2, 4, 5, 8, 12, 13, 14, 16, 17})});

    add({"iprime", "A080591", "fake odd numbers: least increasing with i'(i'(n)) = 4n+3", 0,
         [](std::size_t c) { return solve_square({4, 3, 0, {}, 0}, c); },
         gt(0, {1, 3, 4, 7, 11, 12, 13, 15, 16, 17})});

    add({"q1", "A079255", "n in q iff q(n) is odd and q(n-1) is even", 1,
         [](std::size_t c) { return gen_window(WindowKind::odd_after_even_backward, 1, c); },
         gt(1, {1, 4, 6, 9, 12, 15, 18, 20, 23, 26, 28})});

    add({"q2", "A079259", "n in q iff q(n) and q(n+1) are both odd", 1,
         [](std::size_t c) { return gen_window(WindowKind::both_odd_forward, 1, c); },
         gt(1, {1, 5, 6, 10, 11, 15, 19, 20, 24, 25})});

    add({"golomb", "A001462", "G(n) is the number of times n appears", 1,
         [](std::size_t c) { return golomb(c); },
         gt(1, {1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8})});

    add({"squares", "A000290", "the perfect squares from 1", 1,
         [](std::size_t c) {
             return oracle_values(MembershipOracle::squares(), 1, c, "squares");
         },
         gt(1, {1, 4, 9, 16, 25, 36, 49, 64, 81, 100})});

    add({"primes", "A000040", "the prime numbers", 1,
         [](std::size_t c) {
             return oracle_values(MembershipOracle::primes(), 1, c, "primes");
         },
         gt(1, {2, 3, 5, 7, 11, 13, 17, 19, 23, 29})});

    add({"triangular", "A000217", "the triangular numbers from 1", 1,
         [](std::size_t c) {
             return oracle_values(MembershipOracle::triangular(), 1, c, "triangular");
         },
         gt(1, {1, 3, 6, 10, 15, 21, 28, 36, 45, 55})});

    add({"wythoff", "A000201", "the lower Wythoff sequence floor(n*phi)", 1,
         [](std::size_t c) {
             return oracle_values(MembershipOracle::lower_wythoff(), 1, c, "lower_wythoff");
         },
         gt(1, {1, 3, 4, 6, 8, 9, 11, 12, 14, 16})});

    add({"at_triangular", "A079257", "Aronson transform of the triangular numbers", 1,
         [](std::size_t c) { return aronson_transform(MembershipOracle::triangular(), 1, c); },
         gt(1, {1, 4, 5, 6, 10, 15, 16, 17, 18, 21})});

    add({"at_squares", "A079258", "Aronson transform of the squares", 1,
         [](std::size_t c) { return aronson_transform(MembershipOracle::squares(), 1, c); },
         gt(1, {1, 3, 4, 9, 10, 11, 12, 13, 16, 25})});

    add({"at_primes", "A079254", "Aronson transform of the primes", 1,
         [](std::size_t c) { return aronson_transform(MembershipOracle::primes(), 1, c); },
         gt(1, {4, 6, 8, 11, 12, 13, 14, 17, 18, 20})});

    add({"at_wythoff", "A080760", "Aronson transform of the lower Wythoff sequence", 1,
         [](std::size_t c) { return aronson_transform(MembershipOracle::lower_wythoff(), 1, c); },
         gt(1, {1, 5, 7, 10, 11, 13, 14, 15, 18, 19})});

    add({"at_a", "A079325", "Aronson transform of A079000 itself", 1,
         [](std::size_t c) { return transform_of_sequence(materialize_a, 1, c); },
         gt(1, {1, 3, 4, 6, 10, 11, 12, 14, 22, 23})});

    add({"iat_squares", "A010906", "inverse Aronson transform of the squares", 1,
         [](std::size_t c) {
             return inverse_of(
                 [](std::size_t n) {
                     return oracle_values(MembershipOracle::squares(), 1, n, "squares");
                 },
                 1, c);
         },
         gt(1, {1, 3, 5, 6, 7, 8, 16, 17, 18, 19, 20, 21, 22, 23, 24, 26})});

    add({"iat_primes", "A080759", "inverse Aronson transform of the primes", 1,
         [](std::size_t c) {
             return inverse_of(
                 [](std::size_t n) {
                     return oracle_values(MembershipOracle::primes(), 1, n, "primes");
                 },
                 1, c);
         },
         gt(1, {3, 5, 6, 11, 12, 17, 18, 20, 21, 22})});

    add({"iat_wythoff", "A080746", "inverse Aronson transform of the lower Wythoff sequence", 1,
         [](std::size_t c) {
             return inverse_of(
                 [](std::size_t n) {
                     return oracle_values(MembershipOracle::lower_wythoff(), 1, n,
                                          "lower_wythoff");
                 },
                 1, c);
         },
         gt(1, {1, 4, 6, 7, 9, 10, 12, 14, 15, 17})});

    add({"iat_a", "A005408", "inverse Aronson transform of A079000 (the odd numbers)", 1,
         [](std::size_t c) { return inverse_of(materialize_a, 1, c); },
         gt(1, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19})});

    return r;
}

const std::map<std::string, RegistryEntry>& the_registry() {
    static const std::map<std::string, RegistryEntry> r = build_registry();
    return r;
}

std::string resolve_alias(std::string_view name) {
    static const std::map<std::string, std::string> aliases = {
        {"a'", "aprime"}, {"d'", "dprime"}, {"e'", "eprime"},
        {"g'", "gprime"}, {"i'", "iprime"},
    };
    auto it = aliases.find(std::string(name));
    return it == aliases.end() ? std::string(name) : it->second;
}

bool parse_f_params(std::string_view name, Term& y, Term& z) {
    if (name.size() < 6 || name.substr(0, 2) != "f(" || name.back() != ')') return false;
    auto body = name.substr(2, name.size() - 3);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) return false;
    auto parse = [](std::string_view s, Term& out) {
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && p == s.data() + s.size();
    };
    return parse(body.substr(0, comma), y) && parse(body.substr(comma + 1), z);
}

}  // namespace

RegistryEntry registry_lookup(std::string_view name) {
    std::string key = resolve_alias(name);
    auto& reg = the_registry();
    auto it = reg.find(key);
    if (it != reg.end()) return it->second;
    Term y, z;
    if (parse_f_params(key, y, z)) {
        RegistryEntry e;
        e.name = key;
        e.oeis_id = "";
        e.description = "unique increasing f with f(1) = (y+z+1)/2, f(f(n)) = yn+z";
        e.n0 = 1;
        e.generate = [y, z](std::size_t c) { return mod_family_sequence(y, z, c); };
        e.ground_truth = {{1, (y + z + 1) / 2}};
        return e;
    }
    throw UnknownSequence("no registered sequence named '" + std::string(name) + "'");
}

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto& [k, _] : the_registry()) v.push_back(k);
        return v;
    }();
    return names;
}

}  // namespace aronson
