#include "aronson/words.hpp"

#include <algorithm>
#include <string>

namespace aronson {

void Word::append(int letter, Term repeat) {
    if (repeat <= 0) return;
    if (!runs_.empty() && runs_.back().first == letter)
        runs_.back().second = checked_add(runs_.back().second, repeat);
    else
        runs_.emplace_back(letter, repeat);
    length_ = checked_add(length_, repeat);
}

void Word::append(const Word& other) {
    for (auto& [letter, repeat] : other.runs_) append(letter, repeat);
}

std::vector<int> Word::expand(Term limit) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::min(length_, limit)));
    for (auto& [letter, repeat] : runs_) {
        for (Term i = 0; i < repeat; ++i) {
            if (static_cast<Term>(out.size()) >= limit) return out;
            out.push_back(letter);
        }
    }
    return out;
}

Word Word::prefix(Term n) const {
    Word out;
    Term left = n;
    for (auto& [letter, repeat] : runs_) {
        if (left <= 0) break;
        out.append(letter, std::min(repeat, left));
        left -= std::min(repeat, left);
    }
    return out;
}

int Word::letter_at(Term pos) const {
    Term seen = 0;
    for (auto& [letter, repeat] : runs_) {
        if (pos < seen + repeat) return letter;
        seen += repeat;
    }
    throw std::out_of_range("letter_at past end of word");
}

void Morphism::set_rule(int letter, Word image) { rules_[letter] = std::move(image); }

Word Morphism::apply(const Word& w) const {
    Word out;
    for (auto& [letter, repeat] : w.runs()) {
        auto it = rules_.find(letter);
        if (it == rules_.end())
            throw MissingRule("no morphism rule for letter " + std::to_string(letter));
        // image repeated `repeat` times; single-letter images collapse into
        // one run.
        if (it->second.runs().size() == 1) {
            auto [l, r] = it->second.runs().front();
            out.append(l, checked_mul(r, repeat));
        } else {
            for (Term i = 0; i < repeat; ++i) out.append(it->second);
        }
    }
    return out;
}

Word difference_word(const GeneratedSequence& s) {
    if (s.size() < 2) throw InvalidParameters("difference word needs at least two terms");
    Word w;
    auto t = s.terms();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        Term d = checked_sub(t[i + 1], t[i]);
        w.append(static_cast<int>(d));
    }
    return w;
}

namespace {

Morphism a_morphism() {
    Morphism m;
    Word img1, img2;
    img1.append(2);
    img2.append(1, 2);
    m.set_rule(1, std::move(img1));
    m.set_rule(2, std::move(img2));
    return m;
}

Morphism h_morphism() {
    Morphism m;
    for (int i = 1; i <= 6; ++i) {
        Word img;
        img.append(1, i - 1);
        img.append(7 - i);
        m.set_rule(i, std::move(img));
    }
    return m;
}

}  // namespace

Word a_difference_segment(std::size_t k) {
    if (k < 1) throw InvalidParameters("segment index starts at 1");
    Word s;
    if (k == 1) {
        s.append(3);
        s.append(2);
        return s;
    }
    s.append(1, 3);  // S_0
    auto theta = a_morphism();
    for (std::size_t i = 2; i < k; ++i) s = theta.apply(s);
    return s;
}

Word a_difference_language(std::size_t num_segments) {
    if (num_segments < 1) throw InvalidParameters("need at least one segment");
    Word out;
    out.append(3);
    out.append(2);
    if (num_segments == 1) return out;
    Word s;
    s.append(1, 3);
    auto theta = a_morphism();
    for (std::size_t i = 2; i <= num_segments; ++i) {
        out.append(s);
        s = theta.apply(s);
    }
    return out;
}

Word h_difference_language(std::size_t num_segments) {
    if (num_segments < 1) throw InvalidParameters("need at least one segment");
    Word out;
    Word s;
    s.append(4);  // S_0
    auto theta = h_morphism();
    for (std::size_t i = 0; i < num_segments; ++i) {
        out.append(s);
        s = theta.apply(s);
    }
    return out;
}

Word fake_even_prefix() {
    Word w;
    w.append(2, 2);
    w.append(1);
    return w;
}

Word fake_even_segments(std::size_t k) {
    if (k < 1) throw InvalidParameters("fake-even segments start at k = 1");
    Word w;
    w.append(3);
    // S_k reversed: blocks (1^(2^(2m-1)) 4^(2^(2m-2))) for m = 1..k, reversed
    for (std::size_t m = k; m >= 1; --m) {
        w.append(4, checked_pow(2, static_cast<unsigned>(2 * m - 2)));
        w.append(1, checked_pow(2, static_cast<unsigned>(2 * m - 1)));
    }
    w.append(2);
    // T_k reversed: blocks 1^(2^0) 4^(2^1) 1^(2^2) ... 1^(2^(2k)), reversed
    for (std::size_t j = 2 * k + 1; j >= 1; --j) {
        int letter = (j - 1) % 2 == 0 ? 1 : 4;
        w.append(letter, checked_pow(2, static_cast<unsigned>(j - 1)));
    }
    return w;
}

Word fake_even_difference_language(Term min_letters) {
    Word out = fake_even_prefix();
    for (std::size_t k = 1; out.length() < min_letters; ++k)
        out.append(fake_even_segments(k));
    return out;
}

}  // namespace aronson
