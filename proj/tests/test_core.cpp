#include <doctest.h>

#include <cstdio>
#include <random>
#include <sstream>

#include "aronson/bfile.hpp"
#include "aronson/oracle.hpp"
#include "aronson/registry.hpp"
#include "aronson/types.hpp"

using namespace aronson;

TEST_CASE("checked arithmetic refuses to wrap") {
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(1'000'000'000, 4) == 4'000'000'000LL);
    CHECK_THROWS_AS(checked_mul(Term{1} << 62, 4), OverflowError);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<Term>::max(), 1), OverflowError);
    CHECK_THROWS_AS(checked_pow(10, 25), OverflowError);
}

TEST_CASE("isqrt is exact at boundaries") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    for (Term r = 1; r < 100000; r += 997) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
        CHECK(isqrt(r * r + 1) == r);
    }
    Term big = 3'037'000'499;  // isqrt(2^63-1)
    CHECK(isqrt(std::numeric_limits<Term>::max()) == big);
}

TEST_CASE("floor_phi matches the Beatty sequence") {
    // A000201 prefix
    const Term lw[] = {1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24};
    for (Term n = 1; n <= 15; ++n) CHECK(floor_phi(n) == lw[n - 1]);
    CHECK(floor_phi(3) == 4);  // floor(3*phi) = 4
}

TEST_CASE("oracle membership basics") {
    CHECK(MembershipOracle::odds().contains(7));
    CHECK(MembershipOracle::mod_family_set(3, 0).contains(6));
    CHECK(MembershipOracle::lower_wythoff().contains(4));
    CHECK_FALSE(MembershipOracle::lower_wythoff().contains(5));

    CHECK(MembershipOracle::odds().next_member(6) == 7);
    CHECK(MembershipOracle::squares().next_member(10) == 16);
    CHECK(MembershipOracle::primes().next_member(14) == 17);

    CHECK(MembershipOracle::odds().next_nonmember(3) == 4);
    CHECK(MembershipOracle::evens().next_nonmember(0) == 1);
    CHECK(MembershipOracle::triangular().next_nonmember(6) == 7);
}

TEST_CASE("mod_family_set includes the initial interval when (y+z-1)/2 > 1") {
    auto s = MembershipOracle::mod_family_set(4, 1);  // [2,2] u {5,9,13,...}
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.contains(5));
    CHECK(s.contains(9));
    CHECK(s.next_member(3) == 5);
    auto g_set = MembershipOracle::mod_family_set(2, 1);  // odd numbers >= 3
    CHECK_FALSE(g_set.contains(1));
    CHECK(g_set.contains(3));
    CHECK_FALSE(g_set.contains(4));
}

TEST_CASE("next_member / next_nonmember bracket their argument") {
    std::mt19937_64 rng(12345);
    const MembershipOracle oracles[] = {
        MembershipOracle::odds(),          MembershipOracle::evens(),
        MembershipOracle::multiples(7),    MembershipOracle::residue(5, 2),
        MembershipOracle::squares(),       MembershipOracle::triangular(),
        MembershipOracle::primes(),        MembershipOracle::lower_wythoff(),
        MembershipOracle::mod_family_set(4, 1),
    };
    for (const auto& o : oracles) {
        for (int trial = 0; trial < 200; ++trial) {
            Term x = 1 + static_cast<Term>(rng() % 5000);
            Term m = o.next_member(x);
            CHECK(m >= x);
            CHECK(o.contains(m));
            for (Term y = x; y < m; ++y) CHECK_FALSE(o.contains(y));
            Term nm = o.next_nonmember(x);
            CHECK(nm >= x);
            CHECK_FALSE(o.contains(nm));
            for (Term y = x; y < nm; ++y) CHECK(o.contains(y));
        }
    }
}

TEST_CASE("double complement agrees with the original") {
    auto o = MembershipOracle::primes();
    auto cc = MembershipOracle::complement(MembershipOracle::complement(o));
    for (Term x = 1; x <= 2000; ++x) CHECK(o.contains(x) == cc.contains(x));
}

TEST_CASE("from_sequence oracle enforces its horizon") {
    auto seq = registry_lookup("a").generate(20);
    auto o = MembershipOracle::from_sequence(seq);
    CHECK(o.contains(1));
    CHECK_FALSE(o.contains(2));
    CHECK(o.contains(31));  // a(20) = 31
    CHECK_THROWS_AS(o.contains(32), HorizonExceeded);
    CHECK_THROWS_AS(o.next_member(32), HorizonExceeded);
}

TEST_CASE("from_bfile oracle") {
    std::string path = "test_oracle.bfile";
    write_bfile(path, registry_lookup("e").generate(10));
    auto o = MembershipOracle::from_bfile(path);
    CHECK(o.contains(2));
    CHECK_FALSE(o.contains(4));
    CHECK(o.next_member(10) == 12);
    CHECK_THROWS_AS(o.contains(20), HorizonExceeded);
    std::remove(path.c_str());
}

TEST_CASE("registry: every generator reproduces its printed prefix") {
    for (const auto& name : registry_names()) {
        CAPTURE(name);
        auto entry = registry_lookup(name);
        REQUIRE(!entry.ground_truth.empty());
        auto seq = entry.generate(entry.ground_truth.size());
        for (auto& [n, want] : entry.ground_truth) {
            CAPTURE(n);
            REQUIRE(seq.in_range(n));
            CHECK(seq.at(n) == want);
        }
    }
}

TEST_CASE("registry: aliases and the parameterized family") {
    CHECK(registry_lookup("a'").name == "aprime");
    CHECK(registry_lookup("i'").name == "iprime");
    CHECK_THROWS_AS(registry_lookup("nonesuch"), UnknownSequence);
    auto f52 = registry_lookup("f(5,2)");
    CHECK(f52.generate(1).at(1) == 4);  // (5+2+1)/2
}

TEST_CASE("registry: specific printed values") {
    auto a = registry_lookup("a");
    CHECK(a.ground_truth.front() == std::pair<Term, Term>{1, 1});
    CHECK(a.ground_truth.back() == std::pair<Term, Term>{72, 99});
    auto e = registry_lookup("e").generate(10);
    CHECK(e.at(1) == 2);
    CHECK(e.at(10) == 19);
    auto i = registry_lookup("i").generate(10);
    CHECK(i.n0() == 0);
    CHECK(i.at(0) == 0);
    CHECK(i.at(9) == 17);
}

TEST_CASE("b-file round trip is bit-exact") {
    auto seq = registry_lookup("a").generate(12);
    std::ostringstream out;
    write_bfile(out, seq);
    CHECK(out.str().substr(0, 8) == "1 1\n2 4\n");

    std::istringstream in(out.str());
    auto back = read_bfile(in, "roundtrip");
    REQUIRE(back.size() == seq.size());
    CHECK(back.n0() == seq.n0());
    for (Term n = 1; n <= 12; ++n) CHECK(back.at(n) == seq.at(n));

    std::ostringstream out2;
    write_bfile(out2, back);
    CHECK(out.str() == out2.str());
}

TEST_CASE("b-file reader rejects malformed input") {
    std::istringstream gap("1 1\n3 4\n");
    CHECK_THROWS_AS(read_bfile(gap, "gap"), FormatError);
    std::istringstream junk("1 x\n");
    CHECK_THROWS_AS(read_bfile(junk, "junk"), FormatError);
    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_AS(read_bfile(empty, "empty"), FormatError);
    std::istringstream commented("# A079000\n1 1\n2 4\n");
    auto seq = read_bfile(commented, "ok");
    CHECK(seq.at(2) == 4);
}
