#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aronson/sequence.hpp"

namespace aronson {

// A named sequence: how to regenerate it plus the published prefix it must
// reproduce. Ground-truth values are transcribed fixtures, never computed.
struct RegistryEntry {
    std::string name;
    std::string oeis_id;
    std::string description;
    Term n0 = 1;
    std::function<GeneratedSequence(std::size_t count)> generate;
    std::vector<std::pair<Term, Term>> ground_truth;  // (index, value)
};

// Lookup by name; primed aliases ("a'", "d'", ...) resolve to their ASCII
// spellings (aprime, dprime, ...), and "f(y,z)" instantiates the general
// mod-y family on the fly. UnknownSequence otherwise.
RegistryEntry registry_lookup(std::string_view name);

// The fixed (non-parameterized) names.
const std::vector<std::string>& registry_names();

}  // namespace aronson
