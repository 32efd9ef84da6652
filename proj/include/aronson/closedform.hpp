#pragma once

#include <cstddef>

#include "aronson/sequence.hpp"

namespace aronson {

// Direct-evaluation formulas, used as independent oracles against the greedy
// engine and the constraint solver. All segment decompositions are found by
// integer search over segment boundaries; fractional coefficients are
// evaluated as exact integer quotients with divisibility asserts.

// Position of an index inside a sequence's segment structure: segment number
// k and signed offset j from the segment's center.
struct SegmentIndex {
    int k = 0;
    Term j = 0;
};

// Decompose n >= 3 as n = 9*2^k - 3 + j with -3*2^k <= j < 3*2^k; every such
// n has exactly one decomposition.
SegmentIndex a_segment_of(Term n);

// A079000: a(1)=1, a(2)=4, a(9*2^k - 3 + j) = 12*2^k - 3 + (3j + |j|)/2 for
// k >= 0, -3*2^k <= j < 3*2^k.
Term a_closed(Term n);

// A080596: a'(1)=1, a'(6*2^k - 3 + j) = 8*2^k - 3 + (3j + |j|)/2 for
// k >= 0, -2^(k+1) <= j < 2^(k+1).
Term a_prime_closed(Term n);

// A003605: e(2*3^k + j) = 3^(k+1) + 2j + |j| for k >= 0, -3^k <= j < 3^k.
Term e_closed(Term n);

// The general mod-y family: f(1) = (y+z+1)/2 and, in segment k,
// f(c1*y^k - z/(y-1) + j) = c2*y^(k+1) - z/(y-1) + ((y+1)j + (y-1)|j|)/2
// with c1 = (y+1)(y+z-1)/(2(y-1)), c2 = (y+z-1)/(y-1),
// -(y+z-1)/2 * y^k <= j < (y+z-1)/2 * y^k. Segment 0 starts at index 1.
// Requires y >= 2, opposite parity, y+z >= 1, 2y+z >= 4.
Term f_closed(Term n, Term y, Term z);

// A080637: g(3*2^k - 1 + j) = 2^(k+2) - 1 + (3j + |j|)/2, -2^k <= j < 2^k.
Term g_closed(Term n);

// A079313 closed form: table for n <= 4, then
// b(4t-2)=4t, b(4t-1)=6t-3, b(4t)=6t-1, b(4t+1)=6t+1.
Term b_closed(Term n);

// A014132 (complement of the triangular numbers): d'(n) = n + round(sqrt(2n)),
// via integer square root; 2n is never an exact half-way point.
Term dprime_closed(Term n);

// A001462, Golomb's self-describing sequence, G(1)=1,
// G(n) = 1 + G(n - G(G(n-1))).
GeneratedSequence golomb(std::size_t count);

// phi^(2-phi) * n^(phi-1): G(n) is the nearest integer to this.
double golomb_estimate(Term n);

}  // namespace aronson
