#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "aronson/sequence.hpp"

namespace aronson {

// A finite word over a small integer alphabet, stored run-length encoded
// (difference-language segments grow exponentially). Equality is letterwise
// equality of the expansions, which coincides with equality of the
// normalized runs.
class Word {
  public:
    Word() = default;

    void append(int letter, Term repeat = 1);
    void append(const Word& other);

    Term length() const { return length_; }
    bool empty() const { return runs_.empty(); }
    const std::vector<std::pair<int, Term>>& runs() const { return runs_; }

    // First min(length, limit) letters, expanded.
    std::vector<int> expand(Term limit) const;

    // The word truncated to its first n letters.
    Word prefix(Term n) const;

    int letter_at(Term pos) const;  // 0-based

    bool operator==(const Word& other) const = default;

  private:
    std::vector<std::pair<int, Term>> runs_;
    Term length_ = 0;
};

// A parallel letter-to-word substitution (D0L morphism).
class Morphism {
  public:
    Morphism() = default;
    explicit Morphism(std::map<int, Word> rules) : rules_(std::move(rules)) {}

    void set_rule(int letter, Word image);

    // Concatenation of the images of w's letters; MissingRule if some letter
    // has no rule.
    Word apply(const Word& w) const;

  private:
    std::map<int, Word> rules_;
};

// First differences s(n+1) - s(n) as a word.
Word difference_word(const GeneratedSequence& s);

// The difference language of A079000: concatenation of
// S_-1 = 3,2; S_0 = 1,1,1; S_{k+1} = theta(S_k) under theta(1)=2,
// theta(2)=1,1. `num_segments` counts S_-1 as the first segment.
Word a_difference_language(std::size_t num_segments);

// The k-th segment S_{k-2} of the language above (k >= 1, so segment 1 is
// S_-1).
Word a_difference_segment(std::size_t k);

// The mod-6 difference language of A080780: S_0 = 4, S_{k+1} = theta(S_k)
// with theta(i) = 1,...,1,7-i ((i-1) ones) over the alphabet {1..6}.
Word h_difference_language(std::size_t num_segments);

// Difference structure of the fake even numbers (A080588): the prefix 2,2,1
// followed by segments 3 S_k 2 T_k, where
//   S_k = reverse(1^2 4^1 1^8 4^4 ... 1^(2^(2k-1)) 4^(2^(2k-2)))
//   T_k = reverse(1^1 4^2 1^4 4^8 ... 1^(2^(2k)))
Word fake_even_prefix();
Word fake_even_segments(std::size_t k);

// Prefix of the reconstructed fake-even difference word with at least
// `min_letters` letters (prefix plus whole segments).
Word fake_even_difference_language(Term min_letters);

}  // namespace aronson
