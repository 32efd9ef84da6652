#include "aronson/sequence.hpp"

#include <algorithm>

namespace aronson {

GeneratedSequence::GeneratedSequence(Term n0, std::vector<Term> terms, Provenance prov)
    : n0_(n0), terms_(std::move(terms)), prov_(std::move(prov)) {
    if (prov_.monotone) {
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            if (terms_[i] <= terms_[i - 1])
                throw NonMonotoneInput("sequence declared monotone is not strictly increasing ("
                                       + prov_.generator + ")");
        }
    }
}

Term GeneratedSequence::at(Term n) const {
    if (!in_range(n))
        throw HorizonExceeded("index " + std::to_string(n) + " outside materialized range ["
                              + std::to_string(n0_) + ", " + std::to_string(last_index()) + "] of "
                              + prov_.generator);
    return terms_[static_cast<std::size_t>(n - n0_)];
}

bool GeneratedSequence::contains_value(Term v) const {
    if (prov_.monotone)
        return std::binary_search(terms_.begin(), terms_.end(), v);
    return std::find(terms_.begin(), terms_.end(), v) != terms_.end();
}

}  // namespace aronson
