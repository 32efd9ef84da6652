#include "aronson/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "aronson/closedform.hpp"
#include "aronson/engine.hpp"
#include "aronson/oracle.hpp"
#include "aronson/registry.hpp"
#include "aronson/squares.hpp"
#include "aronson/transform.hpp"
#include "aronson/words.hpp"

namespace aronson {

DensityProfile density_profile(const GeneratedSequence& seq, int k) {
    Term lo = checked_sub(checked_mul(6, checked_pow(2, static_cast<unsigned>(k))), 3);
    Term hi = checked_sub(checked_mul(12, checked_pow(2, static_cast<unsigned>(k))), 4);
    if (!seq.in_range(lo) || !seq.in_range(hi))
        throw HorizonExceeded("segment " + std::to_string(k) + " spans [" + std::to_string(lo)
                              + ", " + std::to_string(hi) + "], beyond the materialized prefix");
    DensityProfile p;
    p.k = k;
    p.stride = k > 18 ? checked_pow(2, static_cast<unsigned>(k - 18)) : 1;
    // exact rational comparison: n1/a1 < n2/a2  <=>  n1*a2 < n2*a1
    Term min_n = lo, min_a = seq.at(lo), max_n = lo, max_a = min_a;
    long double sum = 0.0L;
    Term samples = 0;
    for (Term n = lo; n <= hi; ++n) {
        Term a = seq.at(n);
        using Wide = __int128;
        if (static_cast<Wide>(n) * min_a < static_cast<Wide>(min_n) * a) {
            min_n = n;
            min_a = a;
        }
        if (static_cast<Wide>(n) * max_a > static_cast<Wide>(max_n) * a) {
            max_n = n;
            max_a = a;
        }
        if ((n - lo) % p.stride == 0) {
            sum += static_cast<long double>(n) / static_cast<long double>(a);
            ++samples;
        }
    }
    p.min_ratio = static_cast<double>(min_n) / static_cast<double>(min_a);
    p.max_ratio = static_cast<double>(max_n) / static_cast<double>(max_a);
    p.mean_ratio = static_cast<double>(sum / static_cast<long double>(samples));
    p.min_at = min_n;
    p.max_at = max_n;
    return p;
}

double average_density_constant() { return 0.75 - 0.25 * std::log(32.0 / 27.0); }

std::string IdentityReport::line() const {
    std::string s = name + "," + std::to_string(horizon) + ",";
    if (pass) return s + "PASS";
    return s + "FAIL@" + std::to_string(fail_at);
}

namespace {

struct Ctx {
    Term H = 0;
    bool ok = true;
    Term fail_at = -1;
    std::string detail;

    bool expect(bool cond, Term n, const char* what) {
        if (!cond && ok) {
            ok = false;
            fail_at = n;
            detail = what;
        }
        return ok;
    }
};

using CheckFn = std::function<void(Ctx&)>;

std::size_t count_of(Term h) { return static_cast<std::size_t>(h); }

GeneratedSequence make_a(Term count) {
    RuleSpec r{MembershipOracle::odds(), Mode::iff, true, 1, {}, WindowKind::none};
    return generate_monotone_iff(r, count_of(count));
}

GeneratedSequence closed_range(Term n0, Term count, Term (*fn)(Term), const char* name,
                               bool monotone = true) {
    std::vector<Term> t;
    t.reserve(static_cast<std::size_t>(count));
    for (Term i = 0; i < count; ++i) t.push_back(fn(n0 + i));
    return GeneratedSequence(n0, std::move(t), Provenance{name, monotone});
}

void check_word_prefix(Ctx& c, const Word& expected, const Word& actual, const char* what) {
    Term n = std::min(expected.length(), actual.length());
    Word e = expected.prefix(n), a = actual.prefix(n);
    if (e == a) return;
    // locate the first differing letter for the report
    auto ev = e.expand(n), av = a.expand(n);
    for (Term i = 0; i < n; ++i) {
        if (ev[static_cast<std::size_t>(i)] != av[static_cast<std::size_t>(i)]) {
            c.expect(false, i, what);
            return;
        }
    }
    c.expect(false, n, what);
}

void roundtrip_alpha(Ctx& c, std::function<GeneratedSequence(std::size_t)> make_alpha,
                     Term n0, const char* what) {
    auto alpha = make_alpha(count_of(c.H));
    auto beta = inverse_aronson_oracle(alpha);
    auto back = aronson_transform(beta, n0, count_of(c.H));
    for (Term n = n0; n < n0 + c.H; ++n)
        if (!c.expect(back.at(n) == alpha.at(n), n, what)) return;
}

GeneratedSequence oracle_prefix(const MembershipOracle& o, std::size_t count) {
    std::vector<Term> t;
    t.reserve(count);
    Term x = o.next_member(std::max<Term>(o.universe_start(), 1));
    while (t.size() < count) {
        t.push_back(x);
        x = o.next_member(x + 1);
    }
    return GeneratedSequence(1, std::move(t), Provenance{o.name(), true});
}

const std::map<std::string, CheckFn>& check_table() {
    static const std::map<std::string, CheckFn> table = [] {
        std::map<std::string, CheckFn> t;

        t["a_closed_form"] = [](Ctx& c) {
            auto a = make_a(c.H);
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(a.at(n) == a_closed(n), n, "engine a(n) != closed form")) return;
        };

        t["a_stepper"] = [](Ctx& c) {
            auto a = make_a(c.H);
            for (Term n = 3; n <= c.H; ++n) {
                bool member = a.contains_value(n);
                if (!c.expect(a.at(n) == step_epsilon(a.at(n - 1), member), n,
                              "a(n) != stepper increment"))
                    return;
            }
        };

        t["a_square"] = [](Ctx& c) {
            auto a = make_a(c.H);
            for (Term n = 2; n <= c.H && a.at(n) <= c.H; ++n)
                if (!c.expect(a.at(a.at(n)) == 2 * n + 3, n, "a(a(n)) != 2n+3")) return;
        };

        t["a_odd_membership"] = [](Ctx& c) {
            auto a = make_a(c.H);
            for (Term m = 1; m <= a.at(c.H); m += 2) {
                bool expect_in = m != 3 && m != 5;
                if (!c.expect(a.contains_value(m) == expect_in, m,
                              "odd-number membership of a"))
                    return;
            }
        };

        t["a_even_membership"] = [](Ctx& c) {
            auto a = make_a(c.H);
            auto in_even_family = [](Term v) {
                if (v == 4 || v == 6 || v == 8) return true;
                Term m = v / 2;
                for (Term p = 1;; p *= 2) {  // p = 2^(k-1), k >= 1
                    if (9 * p - 1 <= m && m <= 12 * p - 2) return true;
                    if (9 * p - 1 > m) return false;
                }
            };
            for (Term v = 2; v <= a.at(c.H); v += 2)
                if (!c.expect(a.contains_value(v) == in_even_family(v), v,
                              "even-number membership of a"))
                    return;
        };

        t["aprime_closed_form"] = [](Ctx& c) {
            auto ap = solve_square({2, 3, 1, {{1, 1}}, 2}, count_of(c.H));
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(ap.at(n) == a_prime_closed(n), n, "solver a'(n) != closed form"))
                    return;
        };

        t["b_closed_form"] = [](Ctx& c) {
            RuleSpec rule{MembershipOracle::odds(), Mode::iff, false, 1, {}, WindowKind::none};
            auto b = generate_nonmonotone(rule, count_of(c.H));
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(b.at(n) == b_closed(n), n, "engine b(n) != closed form")) return;
        };

        t["b_membership"] = [](Ctx& c) {
            RuleSpec rule{MembershipOracle::odds(), Mode::iff, false, 1, {}, WindowKind::none};
            auto b = generate_nonmonotone(rule, count_of(c.H));
            std::vector<Term> sorted(b.terms().begin(), b.terms().end());
            std::sort(sorted.begin(), sorted.end());
            auto member = [&](Term v) {
                return std::binary_search(sorted.begin(), sorted.end(), v);
            };
            // every value <= H is decided within the first H terms
            for (Term v = 1; v <= c.H; ++v) {
                bool expect_in = v % 2 == 1 || v == 2 || (v % 4 == 0 && v >= 8);
                if (!c.expect(member(v) == expect_in, v, "membership characterization of b"))
                    return;
            }
        };

        t["c_shift"] = [](Ctx& c) {
            RuleSpec rule{MembershipOracle::evens(), Mode::iff, true, 0, {}, WindowKind::none};
            auto cs = generate_monotone_iff(rule, count_of(c.H + 1));
            for (Term n = 0; n <= c.H; ++n)
                if (!c.expect(cs.at(n) == a_closed(n + 1) - 1, n, "c(n) != a(n+1) - 1")) return;
        };

        t["c_square"] = [](Ctx& c) {
            RuleSpec rule{MembershipOracle::evens(), Mode::iff, true, 0, {}, WindowKind::none};
            auto cs = generate_monotone_iff(rule, count_of(c.H + 1));
            if (!c.expect(cs.at(cs.at(0)) == 0, 0, "c(c(0)) != 0")) return;
            for (Term n = 1; n <= c.H && cs.at(n) <= c.H; ++n)
                if (!c.expect(cs.at(cs.at(n)) == 2 * n + 4, n, "c(c(n)) != 2n+4")) return;
        };

        t["d_shift"] = [](Ctx& c) {
            auto d = registry_lookup("d").generate(count_of(c.H));
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(d.at(n) == g_closed(n + 1) - 1, n, "d(n) != g(n+1) - 1")) return;
        };

        t["dprime_complement"] = [](Ctx& c) {
            Term n = 1;
            auto tri = MembershipOracle::triangular();
            for (Term x = 2; n <= c.H; ++x) {
                if (tri.contains(x)) continue;
                if (!c.expect(dprime_closed(n) == x, n, "d' is not the non-triangular integers"))
                    return;
                ++n;
            }
        };

        t["dprime_parity"] = [](Ctx& c) {
            for (Term n = 1; n <= c.H; ++n) {
                Term v = dprime_closed(dprime_closed(n));
                if (!c.expect((n + v) % 2 == 1, n, "n and d'(d'(n)) share parity")) return;
            }
        };

        t["e_closed_form"] = [](Ctx& c) {
            auto e_eng = registry_lookup("e").generate(count_of(c.H));
            auto e_sol = solve_square({3, 0, 1, {}, 1}, count_of(c.H));
            for (Term n = 1; n <= c.H; ++n) {
                Term want = e_closed(n);
                if (!c.expect(e_eng.at(n) == want, n, "engine e(n) != closed form")) return;
                if (!c.expect(e_sol.at(n) == want, n, "solver e(n) != closed form")) return;
            }
        };

        t["somos_e"] = [](Ctx& c) {
            auto e = closed_range(1, c.H + 1, e_closed, "e_closed");
            for (Term n = 1; 3 * n + 2 <= c.H; ++n) {
                if (!c.expect(e.at(3 * n) == 3 * e.at(n), n, "e(3n) != 3e(n)")) return;
                if (!c.expect(e.at(3 * n + 1) == 2 * e.at(n) + e.at(n + 1), n,
                              "e(3n+1) != 2e(n)+e(n+1)"))
                    return;
                if (!c.expect(e.at(3 * n + 2) == e.at(n) + 2 * e.at(n + 1), n,
                              "e(3n+2) != e(n)+2e(n+1)"))
                    return;
            }
        };

        t["eprime_def"] = [](Ctx& c) {
            auto ep = registry_lookup("eprime").generate(count_of(c.H));
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(ep.at(n) == e_closed(n) - n, n, "e'(n) != e(n) - n")) return;
        };

        t["g_closed_form"] = [](Ctx& c) {
            RuleSpec rule{MembershipOracle::mod_family_set(2, 1), Mode::iff, true, 1, {2},
                          WindowKind::none};
            auto g_eng = generate_monotone_iff(rule, count_of(c.H));
            auto g_sol = mod_family_sequence(2, 1, count_of(c.H));
            for (Term n = 1; n <= c.H; ++n) {
                Term want = g_closed(n);
                if (!c.expect(g_eng.at(n) == want, n, "engine g(n) != closed form")) return;
                if (!c.expect(g_sol.at(n) == want, n, "solver g(n) != closed form")) return;
            }
        };

        t["g_double"] = [](Ctx& c) {
            auto g = [](Term n) { return n == 0 ? Term{0} : g_closed(n); };
            for (Term n = 1; 2 * n + 1 <= c.H; ++n) {
                if (!c.expect(g(2 * n) == g(n) + g(n - 1) + 1, n, "g(2n) != g(n)+g(n-1)+1"))
                    return;
                if (!c.expect(g(2 * n + 1) == 2 * g(n) + 1, n, "g(2n+1) != 2g(n)+1")) return;
            }
        };

        t["a_from_g"] = [](Ctx& c) {
            for (Term n = 1; 3 * n + 2 <= c.H; ++n) {
                if (!c.expect(a_closed(3 * n) == 3 * g_closed(n), n, "a(3n) != 3g(n)")) return;
                if (!c.expect(a_closed(3 * n + 1) == 2 * g_closed(n) + g_closed(n + 1), n,
                              "a(3n+1) != 2g(n)+g(n+1)"))
                    return;
                if (!c.expect(a_closed(3 * n + 2) == g_closed(n) + 2 * g_closed(n + 1), n,
                              "a(3n+2) != g(n)+2g(n+1)"))
                    return;
            }
        };

        t["gprime_shift"] = [](Ctx& c) {
            auto gp = registry_lookup("gprime").generate(count_of(c.H));
            for (Term n = 2; n <= c.H; ++n)
                if (!c.expect(gp.at(n) == g_closed(n - 1) + 1, n, "g'(n) != g(n-1) + 1")) return;
            for (Term n = 2; n <= c.H && gp.in_range(gp.at(n)); ++n)
                if (!c.expect(gp.at(gp.at(n)) == 2 * n, n, "g'(g'(n)) != 2n")) return;
        };

        t["iprime_shift"] = [](Ctx& c) {
            auto i = registry_lookup("i").generate(count_of(c.H + 2));
            auto ip = registry_lookup("iprime").generate(count_of(c.H + 1));
            for (Term n = 0; n <= c.H; ++n)
                if (!c.expect(ip.at(n) == i.at(n + 1) - 1, n, "i'(n) != i(n+1) - 1")) return;
        };

        t["i_square"] = [](Ctx& c) {
            auto i = registry_lookup("i").generate(count_of(c.H));
            auto ip = registry_lookup("iprime").generate(count_of(c.H));
            for (Term n = 0; n < c.H && i.in_range(i.at(n)); ++n)
                if (!c.expect(i.at(i.at(n)) == 4 * n, n, "i(i(n)) != 4n")) return;
            for (Term n = 0; n < c.H && ip.in_range(ip.at(n)); ++n)
                if (!c.expect(ip.at(ip.at(n)) == 4 * n + 3, n, "i'(i'(n)) != 4n+3")) return;
        };

        t["fixed_point"] = [](Ctx& c) {
            auto fix1 = aronson_transform(MembershipOracle::integers(1), 1, count_of(c.H));
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(fix1.at(n) == n, n, "transform of P is not the identity")) return;
            auto fix0 = aronson_transform(MembershipOracle::integers(0), 0, count_of(c.H));
            for (Term n = 0; n < c.H; ++n)
                if (!c.expect(fix0.at(n) == n, n, "transform of N is not the identity")) return;
        };

        t["lemma1_a"] = [](Ctx& c) {
            auto a = make_a(c.H);
            auto sq = sequence_square(a);
            Term sq_max = sq.terms().back();
            for (Term n = 1; n <= c.H; ++n) {
                Term v = a.at(n);
                if (v > sq_max) break;
                if (!c.expect(a.contains_value(n) == sq.contains_value(v), n,
                              "n in a <=> a(n) in a^2 fails"))
                    return;
            }
        };

        t["q1_gaps"] = [](Ctx& c) {
            auto q = registry_lookup("q1").generate(count_of(c.H));
            for (Term n = 2; n <= c.H; ++n) {
                Term gap = q.at(n) - q.at(n - 1);
                if (!c.expect(gap == 2 || gap == 3, n, "q1 gap outside {2,3}")) return;
            }
        };

        t["golomb_selfdesc"] = [](Ctx& c) {
            auto G = golomb(count_of(c.H));
            // run-length self-description: value k appears G(k) times
            std::vector<Term> desc = {1, 2, 2};
            for (Term k = 3; static_cast<Term>(desc.size()) < c.H; ++k)
                for (Term r = 0; r < G.at(k); ++r) desc.push_back(k);
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(G.at(n) == desc[static_cast<std::size_t>(n - 1)], n,
                              "recurrence disagrees with self-description"))
                    return;
        };

        t["golomb_estimate"] = [](Ctx& c) {
            auto G = golomb(count_of(c.H));
            Term lo = std::max<Term>(1, c.H / 10);
            for (Term n = lo; n <= c.H; ++n) {
                double err = std::abs(static_cast<double>(G.at(n)) - golomb_estimate(n));
                if (!c.expect(err < 1.0, n, "G(n) not within 1 of phi^(2-phi) n^(phi-1)"))
                    return;
            }
        };

        t["diff_lang_a"] = [](Ctx& c) {
            auto a = make_a(c.H + 1);
            Word actual = difference_word(a);
            Word lang;
            for (std::size_t seg = 1; lang.length() < actual.length(); ++seg)
                lang = a_difference_language(seg);
            check_word_prefix(c, lang, actual, "morphism language != delta(a)");
        };

        t["diff_lang_h"] = [](Ctx& c) {
            auto h = registry_lookup("h").generate(count_of(c.H + 1));
            Word actual = difference_word(h);
            Word lang;
            for (std::size_t seg = 1; lang.length() < actual.length(); ++seg)
                lang = h_difference_language(seg);
            check_word_prefix(c, lang, actual, "mod-6 morphism language != delta(h)");
        };

        t["diff_lang_i"] = [](Ctx& c) {
            auto i = registry_lookup("i").generate(count_of(c.H + 1));
            Word actual = difference_word(i);
            Word lang = fake_even_difference_language(actual.length());
            check_word_prefix(c, lang, actual, "fake-even segments != delta(i)");
        };

        t["inverse_squares_segments"] = [](Ctx& c) {
            auto alpha = oracle_prefix(MembershipOracle::squares(), count_of(c.H));
            auto beta = inverse_aronson(alpha, count_of(c.H));
            std::vector<Term> law = {1, 3};
            auto squares = MembershipOracle::squares();
            for (Term k = 3; static_cast<Term>(law.size()) < c.H; ++k) {
                if (squares.contains(k)) law.push_back(k * k);
                else
                    for (Term v = (k - 1) * (k - 1) + 1; v <= k * k - 1; ++v) law.push_back(v);
            }
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(beta.at(n) == law[static_cast<std::size_t>(n - 1)], n,
                              "segment law of inverse(squares)"))
                    return;
        };

        t["inverse_wythoff_law"] = [](Ctx& c) {
            auto alpha = oracle_prefix(MembershipOracle::lower_wythoff(), count_of(2 * c.H));
            auto beta = inverse_aronson(alpha, count_of(c.H));
            std::vector<Term> law;
            for (Term k = 1; static_cast<Term>(law.size()) < 2 * c.H + 8; ++k) {
                law.push_back(floor_phi(k) + k - 1);
                if (k >= 2) law.push_back(2 * floor_phi(k) + k - 1);
            }
            std::sort(law.begin(), law.end());
            for (Term n = 1; n <= c.H; ++n)
                if (!c.expect(beta.at(n) == law[static_cast<std::size_t>(n - 1)], n,
                              "two-family law of inverse(wythoff)"))
                    return;
        };

        t["square_in_inverse"] = [](Ctx& c) {
            auto check_one = [&c](std::function<GeneratedSequence(std::size_t)> mk, Term n0,
                                  const char* what) {
                auto alpha = mk(count_of(c.H));
                auto sq = sequence_square(alpha);
                auto beta = inverse_aronson_oracle(alpha);
                for (Term n = n0; n <= sq.last_index(); ++n) {
                    Term v = sq.at(n);
                    bool in;
                    try {
                        in = beta.contains(v);
                    } catch (const HorizonExceeded&) {
                        break;
                    }
                    if (!c.expect(in, n, what)) return;
                }
            };
            check_one(
                [](std::size_t n) {
                    return oracle_prefix(MembershipOracle::squares(), n);
                },
                1, "alpha^2 not within inverse transform (squares)");
            if (!c.ok) return;
            check_one([](std::size_t n) { return make_a(static_cast<Term>(n)); }, 1,
                      "alpha^2 not within inverse transform (a)");
        };

        t["roundtrip_squares"] = [](Ctx& c) {
            roundtrip_alpha(
                c, [](std::size_t n) { return oracle_prefix(MembershipOracle::squares(), n); },
                1, "transform(inverse(squares)) != squares");
        };
        t["roundtrip_primes"] = [](Ctx& c) {
            roundtrip_alpha(
                c, [](std::size_t n) { return oracle_prefix(MembershipOracle::primes(), n); }, 1,
                "transform(inverse(primes)) != primes");
        };
        t["roundtrip_triangular"] = [](Ctx& c) {
            roundtrip_alpha(
                c,
                [](std::size_t n) { return oracle_prefix(MembershipOracle::triangular(), n); },
                1, "transform(inverse(triangular)) != triangular");
        };
        t["roundtrip_wythoff"] = [](Ctx& c) {
            roundtrip_alpha(
                c,
                [](std::size_t n) {
                    return oracle_prefix(MembershipOracle::lower_wythoff(), n);
                },
                1, "transform(inverse(wythoff)) != wythoff");
        };
        t["roundtrip_a"] = [](Ctx& c) {
            roundtrip_alpha(c, [](std::size_t n) { return make_a(static_cast<Term>(n)); }, 1,
                            "transform(inverse(a)) != a");
        };

        t["mod_family_engine"] = [](Ctx& c) {
            const std::pair<Term, Term> params[] = {{2, 1}, {3, 0}, {4, 1}, {5, 2}};
            for (auto [y, z] : params) {
                Term f1 = (y + z + 1) / 2;
                RuleSpec rule{MembershipOracle::mod_family_set(y, z), Mode::iff, true, 1, {f1},
                              WindowKind::none};
                auto eng = generate_monotone_iff(rule, count_of(c.H));
                auto sol = mod_family_sequence(y, z, count_of(c.H));
                for (Term n = 1; n <= c.H; ++n)
                    if (!c.expect(eng.at(n) == sol.at(n), n,
                                  "membership-rule engine != mod-family solver"))
                        return;
            }
        };

        t["registry_prefixes"] = [](Ctx& c) {
            for (auto& name : registry_names()) {
                auto entry = registry_lookup(name);
                auto seq = entry.generate(entry.ground_truth.size());
                for (auto& [n, want] : entry.ground_truth) {
                    if (!c.expect(seq.in_range(n) && seq.at(n) == want, n,
                                  "registry prefix mismatch")) {
                        c.detail += " (" + name + ")";
                        return;
                    }
                }
            }
        };

        return t;
    }();
    return table;
}

}  // namespace

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (auto& [name, _] : check_table()) names.push_back(name);
    return names;
}

IdentityReport verify_identity(std::string_view name, Term horizon) {
    auto& table = check_table();
    auto it = table.find(std::string(name));
    if (it == table.end())
        throw UnknownIdentity("no identity named '" + std::string(name) + "'");
    Ctx ctx;
    ctx.H = horizon;
    it->second(ctx);
    IdentityReport r;
    r.name = it->first;
    r.horizon = horizon;
    r.pass = ctx.ok;
    r.fail_at = ctx.fail_at;
    r.detail = ctx.detail;
    return r;
}

std::vector<IdentityReport> verify_all(Term horizon, unsigned jobs) {
    auto names = identity_names();
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<IdentityReport> out(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= names.size()) return;
            out[i] = verify_identity(names[i], horizon);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs && j < names.size(); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace aronson
