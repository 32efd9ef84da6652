#include "aronson/types.hpp"

#include <limits>

namespace aronson {

Term checked_add(Term a, Term b) {
    Term r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Term checked_sub(Term a, Term b) {
    Term r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

Term checked_mul(Term a, Term b) {
    Term r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Term checked_pow(Term base, unsigned exp) {
    Term r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

namespace {

unsigned __int128 isqrt_u128(unsigned __int128 x) {
    if (x == 0) return 0;
    // Newton iteration from a power-of-two seed >= sqrt(x).
    int bits = 0;
    for (unsigned __int128 t = x; t > 0; t >>= 1) ++bits;
    unsigned __int128 r = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
    while (true) {
        unsigned __int128 next = (r + x / r) >> 1;
        if (next >= r) break;
        r = next;
    }
    while (r * r > x) --r;
    return r;
}

}  // namespace

Term isqrt(Term x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    return static_cast<Term>(isqrt_u128(static_cast<unsigned __int128>(x)));
}

Term floor_phi(Term n) {
    if (n < 0) throw std::domain_error("floor_phi of negative value");
    if (n == 0) return 0;
    auto m = static_cast<unsigned __int128>(n);
    // t = floor(n*sqrt5); n*sqrt5 is irrational for n > 0, so the floor of
    // (n*sqrt5 - n)/2 is (t - n) div 2 in either parity case.
    unsigned __int128 t = isqrt_u128(5 * m * m);
    Term half = static_cast<Term>((t - m) >> 1);
    return checked_add(n, half);
}

}  // namespace aronson
