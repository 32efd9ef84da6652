// Command-line front end: generate, transform, invert, square, solve, diff,
// verify, stats; b-file import/export.
//
// Exit codes: 0 success, 1 verification or generation failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aronson/analysis.hpp"
#include "aronson/bfile.hpp"
#include "aronson/closedform.hpp"
#include "aronson/engine.hpp"
#include "aronson/oracle.hpp"
#include "aronson/registry.hpp"
#include "aronson/squares.hpp"
#include "aronson/transform.hpp"
#include "aronson/words.hpp"

namespace {

using namespace aronson;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

Term to_term(const std::string& s) {
    std::size_t used = 0;
    Term v = std::stoll(s, &used);
    if (used != s.size()) throw CLI::ValidationError("not an integer: '" + s + "'");
    return v;
}

// Oracle grammar:
//   odds | evens | multiples:M | residue:Y:Z | family:Y:Z | squares |
//   triangular | primes | wythoff | integers:FROM | not:<oracle> |
//   bfile:PATH | seq:NAME[:COUNT]
MembershipOracle parse_oracle(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i) -> Term {
        if (i >= parts.size())
            throw CLI::ValidationError("oracle '" + spec + "' is missing a parameter");
        return to_term(parts[i]);
    };
    if (kind == "odds") return MembershipOracle::odds();
    if (kind == "evens") return MembershipOracle::evens();
    if (kind == "multiples") return MembershipOracle::multiples(arg(1));
    if (kind == "residue") return MembershipOracle::residue(arg(1), arg(2));
    if (kind == "family") return MembershipOracle::mod_family_set(arg(1), arg(2));
    if (kind == "squares") return MembershipOracle::squares();
    if (kind == "triangular") return MembershipOracle::triangular();
    if (kind == "primes") return MembershipOracle::primes();
    if (kind == "wythoff") return MembershipOracle::lower_wythoff();
    if (kind == "integers") return MembershipOracle::integers(arg(1));
    if (kind == "not") {
        if (parts.size() < 2) throw CLI::ValidationError("not:<oracle> needs an inner oracle");
        return MembershipOracle::complement(
            parse_oracle(spec.substr(std::string("not:").size())));
    }
    if (kind == "bfile") {
        if (parts.size() < 2) throw CLI::ValidationError("bfile:<path> needs a path");
        return MembershipOracle::from_bfile(spec.substr(6));
    }
    if (kind == "seq") {
        if (parts.size() < 2) throw CLI::ValidationError("seq:<name>[:count] needs a name");
        std::size_t count = parts.size() >= 3 ? static_cast<std::size_t>(to_term(parts[2]))
                                              : 4096;
        return MembershipOracle::from_sequence(registry_lookup(parts[1]).generate(count));
    }
    throw CLI::ValidationError("unknown oracle kind '" + kind + "'");
}

// Inline rule spec: key=value pairs separated by commas, e.g.
//   oracle=residue:3:0,mode=iff,n0=1,seeds=2;5,monotone=true,window=none
RuleSpec parse_rule(const std::string& spec) {
    RuleSpec rule{MembershipOracle::odds(), Mode::iff, true, 1, {}, WindowKind::none};
    for (auto& kv : split(spec, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("rule clause '" + kv + "' is not key=value");
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "oracle") {
            rule.oracle = parse_oracle(value);
        } else if (key == "mode") {
            if (value == "iff") rule.mode = Mode::iff;
            else if (value == "onlyif") rule.mode = Mode::only_if;
            else if (value == "if") rule.mode = Mode::if_;
            else if (value == "negatediff") rule.mode = Mode::negated_iff;
            else throw CLI::ValidationError("unknown mode '" + value + "'");
        } else if (key == "n0") {
            rule.n0 = to_term(value);
        } else if (key == "monotone") {
            rule.monotone = value == "true" || value == "1";
        } else if (key == "seeds") {
            for (auto& s : split(value, ';'))
                if (!s.empty()) rule.seed_terms.push_back(to_term(s));
        } else if (key == "window") {
            if (value == "none") rule.window = WindowKind::none;
            else if (value == "odd_after_even") rule.window = WindowKind::odd_after_even_backward;
            else if (value == "next_both_odd") rule.window = WindowKind::both_odd_forward;
            else throw CLI::ValidationError("unknown window '" + value + "'");
        } else {
            throw CLI::ValidationError("unknown rule key '" + key + "'");
        }
    }
    return rule;
}

void emit(const GeneratedSequence& seq, const std::string& bfile_path) {
    if (bfile_path.empty())
        write_bfile(std::cout, seq);
    else
        write_bfile(bfile_path, seq);
}

GeneratedSequence load_alpha(const std::string& name_or_bfile, std::size_t alpha_count) {
    if (name_or_bfile.rfind("bfile:", 0) == 0) return read_bfile(name_or_bfile.substr(6));
    return registry_lookup(name_or_bfile).generate(alpha_count);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-referential integer sequences: greedy generators, the Aronson\n"
                 "transform and its inverse, square constraints s(s(n)) = yn+z, morphism\n"
                 "difference languages, and identity verification.\n\n"
                 "Sequences are written in OEIS b-file format (one \"index value\" pair\n"
                 "per line) to stdout, or to --bfile PATH."};
    app.require_subcommand(1);

    std::string name_or_spec, bfile_path;
    std::size_t count = 20;

    auto* gen = app.add_subcommand("gen", "generate a named sequence or an inline rule\n"
                                          "(name: see 'list'; rule: key=value pairs, e.g.\n"
                                          "oracle=multiples:3,mode=iff,n0=1,seeds=2)");
    gen->add_option("name", name_or_spec, "registry name or inline rule spec")->required();
    gen->add_option("--count", count, "number of terms");
    gen->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    std::string beta_spec;
    Term n0 = 1;
    auto* tr = app.add_subcommand("transform", "Aronson transform of an oracle");
    tr->add_option("--beta", beta_spec, "oracle spec (odds, primes, residue:3:0, ...)")
        ->required();
    tr->add_option("--n0", n0, "starting index");
    tr->add_option("--count", count, "number of terms");
    tr->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    std::string alpha_spec;
    std::size_t alpha_count = 0;
    auto* inv = app.add_subcommand("inverse", "inverse Aronson transform");
    inv->add_option("--alpha", alpha_spec, "registry name or bfile:PATH")->required();
    inv->add_option("--count", count, "number of terms");
    inv->add_option("--alpha-count", alpha_count,
                    "materialized prefix of alpha (default: grows as needed)");
    inv->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    std::string seq_name;
    auto* sq = app.add_subcommand("square", "the square s(s(n)) of a sequence");
    sq->add_option("--seq", seq_name, "registry name or bfile:PATH")->required();
    sq->add_option("--count", count, "terms of the base sequence to materialize");
    sq->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    Term sy = 2, sz = 0, sn0 = 1, sfc = -1;
    std::vector<std::string> seed_specs;
    auto* ss = app.add_subcommand("solve-square",
                                  "lexicographically least increasing s with s(s(n)) = y*n+z");
    ss->add_option("--y", sy, "y >= 2")->required();
    ss->add_option("--z", sz, "z")->required();
    ss->add_option("--n0", sn0, "starting index");
    ss->add_option("--first-constrained", sfc,
                   "first index where the constraint applies (default n0)");
    ss->add_option("--seed", seed_specs, "forced term n=v (repeatable)");
    ss->add_option("--count", count, "number of terms");
    ss->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    auto* df = app.add_subcommand("diff", "first differences of a sequence");
    df->add_option("--seq", seq_name, "registry name or bfile:PATH")->required();
    df->add_option("--count", count, "terms of the base sequence");
    df->add_option("--bfile", bfile_path, "write to this path instead of stdout");

    std::string identity = "all";
    Term horizon = 10000;
    unsigned jobs = 0;
    auto* vf = app.add_subcommand("verify", "run identity checks; exit 1 on any failure");
    vf->add_option("identity", identity, "identity name or 'all' (see 'list --identities')");
    vf->add_option("--horizon", horizon, "verification horizon");
    vf->add_option("--jobs", jobs, "worker threads for 'all' (0 = hardware)");

    int segment = 10;
    std::string stats_what = "density";
    auto* st = app.add_subcommand("stats", "segment statistics of the odd-rule sequence");
    st->add_option("what", stats_what, "'density'");
    st->add_option("--segment", segment, "segment index k")->required();

    auto* ls = app.add_subcommand("list", "list registered sequences");
    bool list_identities = false;
    ls->add_flag("--identities", list_identities, "list identity names instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the offending flag / help text
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            GeneratedSequence seq =
                name_or_spec.find('=') != std::string::npos
                    ? generate(parse_rule(name_or_spec), count)
                    : registry_lookup(name_or_spec).generate(count);
            emit(seq, bfile_path);
        } else if (*tr) {
            emit(aronson_transform(parse_oracle(beta_spec), n0, count), bfile_path);
        } else if (*inv) {
            if (alpha_spec.rfind("bfile:", 0) == 0 || alpha_count > 0) {
                emit(inverse_aronson(load_alpha(alpha_spec, alpha_count), count), bfile_path);
            } else {
                // grow the alpha prefix until `count` inverse values fit
                for (std::size_t ac = std::max<std::size_t>(count, 64);; ac *= 2) {
                    try {
                        emit(inverse_aronson(load_alpha(alpha_spec, ac), count), bfile_path);
                        break;
                    } catch (const HorizonExceeded&) {
                        if (ac > (std::size_t{1} << 26)) throw;
                    }
                }
            }
        } else if (*sq) {
            auto base = load_alpha(seq_name, count);
            emit(sequence_square(base), bfile_path);
        } else if (*ss) {
            SquareConstraint c;
            c.y = sy;
            c.z = sz;
            c.n0 = sn0;
            c.first_constrained = sfc < 0 ? sn0 : sfc;
            for (auto& s : seed_specs) {
                auto eq = s.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--seed expects n=v, got '" + s + "'");
                c.forced.emplace_back(to_term(s.substr(0, eq)), to_term(s.substr(eq + 1)));
            }
            emit(solve_square(c, count), bfile_path);
        } else if (*df) {
            auto base = load_alpha(seq_name, count);
            Word w = difference_word(base);
            std::vector<Term> letters;
            for (int l : w.expand(w.length())) letters.push_back(l);
            emit(GeneratedSequence(base.n0(), std::move(letters),
                                   Provenance{"diff(" + base.provenance().generator + ")", false}),
                 bfile_path);
        } else if (*vf) {
            bool all_pass = true;
            if (identity == "all") {
                for (auto& r : verify_all(horizon, jobs)) {
                    std::cout << r.line() << '\n';
                    all_pass = all_pass && r.pass;
                }
            } else {
                auto r = verify_identity(identity, horizon);
                std::cout << r.line() << '\n';
                all_pass = r.pass;
            }
            if (!all_pass) return 1;
        } else if (*st) {
            if (stats_what != "density") throw CLI::ValidationError("unknown stats '" + stats_what + "'");
            std::size_t need = static_cast<std::size_t>(12) << segment;
            auto a = registry_lookup("a").generate(need);
            auto p = density_profile(a, segment);
            std::printf("segment %d: indexes [%lld, %lld]\n", p.k,
                        static_cast<long long>(6 * (Term{1} << segment) - 3),
                        static_cast<long long>(12 * (Term{1} << segment) - 4));
            std::printf("min n/a(n)  = %.9f at n=%lld (limit 2/3)\n", p.min_ratio,
                        static_cast<long long>(p.min_at));
            std::printf("max n/a(n)  = %.9f at n=%lld (limit 3/4)\n", p.max_ratio,
                        static_cast<long long>(p.max_at));
            std::printf("mean n/a(n) = %.9f (stride %lld; limit %.9f)\n", p.mean_ratio,
                        static_cast<long long>(p.stride), average_density_constant());
        } else if (*ls) {
            if (list_identities) {
                for (auto& n : identity_names()) std::cout << n << '\n';
            } else {
                for (auto& n : registry_names()) {
                    auto e = registry_lookup(n);
                    std::cout << n << '\t' << e.oeis_id << '\t' << e.description << '\n';
                }
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        // surface the module error type name verbatim
        std::string what = e.what();
        const char* type = "Error";
        if (dynamic_cast<const HorizonExceeded*>(&e)) type = "HorizonExceeded";
        else if (dynamic_cast<const OverflowError*>(&e)) type = "OverflowError";
        else if (dynamic_cast<const UnknownSequence*>(&e)) type = "UnknownSequence";
        else if (dynamic_cast<const UnknownIdentity*>(&e)) type = "UnknownIdentity";
        else if (dynamic_cast<const ContradictionAtStart*>(&e)) type = "ContradictionAtStart";
        else if (dynamic_cast<const Contradiction*>(&e)) type = "Contradiction";
        else if (dynamic_cast<const NoCandidate*>(&e)) type = "NoCandidate";
        else if (dynamic_cast<const BacktrackExhausted*>(&e)) type = "BacktrackExhausted";
        else if (dynamic_cast<const InvalidParameters*>(&e)) type = "InvalidParameters";
        else if (dynamic_cast<const NonMonotoneInput*>(&e)) type = "NonMonotoneInput";
        else if (dynamic_cast<const MissingRule*>(&e)) type = "MissingRule";
        else if (dynamic_cast<const FormatError*>(&e)) type = "FormatError";
        std::cerr << type << ": " << what << '\n';
        return 1;
    }
    return 0;
}
