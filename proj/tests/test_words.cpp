#include <doctest.h>

#include "aronson/registry.hpp"
#include "aronson/words.hpp"

using namespace aronson;

namespace {

Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.append(l);
    return w;
}

}  // namespace

TEST_CASE("words normalize runs; equality is letterwise") {
    Word w;
    w.append(1, 2);
    w.append(1);
    w.append(2, 3);
    CHECK(w.length() == 6);
    CHECK(w.runs().size() == 2);
    CHECK(w == word_of({1, 1, 1, 2, 2, 2}));
    CHECK(w.prefix(4) == word_of({1, 1, 1, 2}));
    CHECK(w.letter_at(0) == 1);
    CHECK(w.letter_at(5) == 2);
    CHECK(w.expand(4) == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("morphism application") {
    Morphism theta;
    theta.set_rule(1, word_of({2}));
    theta.set_rule(2, word_of({1, 1}));
    CHECK(theta.apply(word_of({1, 1, 1})) == word_of({2, 2, 2}));
    CHECK(theta.apply(word_of({2, 2, 2})) == word_of({1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(theta.apply(word_of({3})), MissingRule);

    Morphism mod6;
    for (int i = 1; i <= 6; ++i) {
        Word img;
        img.append(1, i - 1);
        img.append(7 - i);
        mod6.set_rule(i, std::move(img));
    }
    CHECK(mod6.apply(word_of({4})) == word_of({1, 1, 1, 3}));
}

TEST_CASE("difference words of the printed sequences") {
    auto a = registry_lookup("a").generate(40);
    CHECK(difference_word(a).prefix(8) == word_of({3, 2, 1, 1, 1, 2, 2, 2}));

    auto g = registry_lookup("g").generate(40);
    CHECK(difference_word(g).prefix(10) == word_of({1, 2, 1, 1, 2, 2, 1, 1, 1, 1}));

    auto i = registry_lookup("i").generate(40);
    CHECK(difference_word(i).prefix(16)
          == word_of({2, 2, 1, 3, 4, 1, 1, 2, 1, 1, 1, 1, 4, 4, 1, 3}));
}

TEST_CASE("difference language of a") {
    CHECK(a_difference_language(3) == word_of({3, 2, 1, 1, 1, 2, 2, 2}));
    CHECK(a_difference_segment(1) == word_of({3, 2}));
    CHECK(a_difference_segment(3) == word_of({2, 2, 2}));
    CHECK(a_difference_segment(4).length() == 6);  // block lengths double

    auto a = registry_lookup("a").generate(100001);
    Word actual = difference_word(a);
    Word lang;
    for (std::size_t seg = 1; lang.length() < actual.length(); ++seg)
        lang = a_difference_language(seg);
    CHECK(lang.prefix(actual.length()) == actual);
}

TEST_CASE("run-length structure of delta(a): alternating 1 and 2 blocks double") {
    Word lang = a_difference_language(12);
    auto runs = lang.runs();
    // 3, 2, then 1^3, 2^3, 1^6, 2^6, ...
    REQUIRE(runs.size() >= 8);
    CHECK(runs[0] == std::pair<int, Term>{3, 1});
    CHECK(runs[1] == std::pair<int, Term>{2, 1});
    Term expect = 3;
    for (std::size_t r = 2; r + 1 < runs.size(); r += 2) {
        CHECK(runs[r] == std::pair<int, Term>{1, expect});
        CHECK(runs[r + 1] == std::pair<int, Term>{2, expect});
        expect *= 2;
    }
}

TEST_CASE("run-length structure of delta(g): alternating 1^(2^k), 2^(2^k)") {
    auto g = registry_lookup("g").generate(5000);
    auto runs = difference_word(g).runs();
    Term expect = 1;
    for (std::size_t r = 0; r + 1 < runs.size(); r += 2) {
        CHECK(runs[r] == std::pair<int, Term>{1, expect});
        CHECK(runs[r + 1] == std::pair<int, Term>{2, expect});
        expect *= 2;
    }
}

TEST_CASE("mod-6 difference language of h") {
    CHECK(h_difference_language(2) == word_of({4, 1, 1, 1, 3}));
    CHECK(h_difference_language(3) == word_of({4, 1, 1, 1, 3, 6, 6, 6, 1, 1, 4}));

    auto h = registry_lookup("h").generate(10001);
    Word actual = difference_word(h);
    Word lang;
    for (std::size_t seg = 1; lang.length() < actual.length(); ++seg)
        lang = h_difference_language(seg);
    CHECK(lang.prefix(actual.length()) == actual);
}

TEST_CASE("fake-even difference structure") {
    CHECK(fake_even_prefix() == word_of({2, 2, 1}));
    CHECK(fake_even_segments(1) == word_of({3, 4, 1, 1, 2, 1, 1, 1, 1, 4, 4, 1}));

    auto i = registry_lookup("i").generate(20001);
    Word actual = difference_word(i);
    Word lang = fake_even_difference_language(actual.length());
    CHECK(lang.prefix(actual.length()) == actual);
}

TEST_CASE("morphism images under repeated application double block lengths") {
    Morphism theta;
    theta.set_rule(1, word_of({2}));
    theta.set_rule(2, word_of({1, 1}));
    Word s = word_of({1, 1, 1});
    Term len = 3;
    for (int k = 0; k < 20; ++k) {
        CHECK(s.length() == len);
        Word next = theta.apply(s);
        // lengths alternate 3*2^k: |theta(1^m)| = m, |theta(2^m)| = 2m
        if (k % 2 == 0) CHECK(next.length() == s.length());
        else CHECK(next.length() == 2 * s.length());
        s = next;
        len = s.length();
    }
}
