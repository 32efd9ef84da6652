#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aronson/types.hpp"

namespace aronson {

// Which generator produced a sequence, with its parameters spelled out.
struct Provenance {
    std::string generator;
    bool monotone = false;  // strictly increasing when true
};

// A materialized, indexed prefix of a sequence: s(n0), s(n0+1), ...
// Immutable after construction and freely shareable across threads.
class GeneratedSequence {
  public:
    GeneratedSequence(Term n0, std::vector<Term> terms, Provenance prov);

    Term n0() const { return n0_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    Term last_index() const { return n0_ + static_cast<Term>(terms_.size()) - 1; }

    // s(n); throws HorizonExceeded outside [n0, n0+size).
    Term at(Term n) const;

    bool in_range(Term n) const {
        return n >= n0_ && n <= last_index();
    }

    std::span<const Term> terms() const { return terms_; }

    // Whether v occurs among the materialized terms. Binary search for
    // monotone sequences, linear otherwise.
    bool contains_value(Term v) const;

    const Provenance& provenance() const { return prov_; }

  private:
    Term n0_;
    std::vector<Term> terms_;
    Provenance prov_;
};

}  // namespace aronson
