#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "aronson/sequence.hpp"

namespace aronson {

// The functional constraint s(s(n)) = y*n + z over a strictly increasing
// sequence on indexes >= n0, with optional forced initial terms.
struct SquareConstraint {
    Term y = 2;
    Term z = 0;
    Term n0 = 1;
    std::vector<std::pair<Term, Term>> forced;  // (index, value) seeds
    // First index at which the constraint is enforced. The seeded sequences
    // with s(s(1)) = s(1) != y+z (A079000, A080596) start enforcing at 2.
    Term first_constrained = 1;

    bool mod_family_shape() const {
        return y >= 2 && (y + z) % 2 != 0 && y + z >= 1 && 2 * y + z >= 4;
    }
};

// Lexicographically least monotone solution: known assignments propagate via
// s(n) = m  =>  s(m) = y*n + z to a fixed point; at a free index the smallest
// candidate passing order and pigeonhole-room checks against all known
// assignments (plus a consistent propagation closure) is committed.
//
// Parameter sets where y and z have equal parity are refused without seeds,
// except the whitelisted fake-even instance (y=4, z=0, n0=0).
GeneratedSequence solve_square(const SquareConstraint& constraint, std::size_t count);

// The unique monotone sequence with f(1) = (y+z+1)/2 and f(f(n)) = y*n + z;
// requires y >= 2, opposite parity, y+z >= 1, 2y+z >= 4 (InvalidParameters
// otherwise). Equals solve_square seeded with f(1).
GeneratedSequence mod_family_sequence(Term y, Term z, std::size_t count);

}  // namespace aronson
