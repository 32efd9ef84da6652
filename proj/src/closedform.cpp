#include "aronson/closedform.hpp"

#include <cmath>
#include <cstdlib>

namespace aronson {

namespace {

// Divisibility guards stay on in release builds: a failure means a broken
// segment decomposition, never a recoverable input error.
Term exact_div(Term num, Term den) {
    if (num % den != 0)
        throw std::logic_error("non-integer quotient in closed-form evaluation");
    return num / den;
}

// (3j + |j|) / 2; the numerator is always even.
Term half_3j_absj(Term j) {
    return exact_div(checked_add(checked_mul(3, j), std::abs(j)), 2);
}

}  // namespace

SegmentIndex a_segment_of(Term n) {
    if (n < 3) throw InvalidParameters("segment decomposition applies for n >= 3");
    // segment k covers [6*2^k - 3, 12*2^k - 4]
    SegmentIndex s;
    Term p = 1;  // 2^k
    while (checked_sub(checked_mul(12, p), 4) < n) {
        p = checked_mul(p, 2);
        ++s.k;
    }
    s.j = n - (9 * p - 3);
    return s;
}

Term a_closed(Term n) {
    if (n < 1) throw InvalidParameters("a(n) defined for n >= 1");
    if (n == 1) return 1;
    if (n == 2) return 4;
    auto [k, j] = a_segment_of(n);
    Term p = Term{1} << k;
    return checked_add(12 * p - 3, half_3j_absj(j));
}

Term a_prime_closed(Term n) {
    if (n < 1) throw InvalidParameters("a'(n) defined for n >= 1");
    if (n == 1) return 1;
    // segment k covers [4*2^k - 3, 8*2^k - 4]
    Term p = 1;
    while (checked_sub(checked_mul(8, p), 4) < n) p = checked_mul(p, 2);
    Term j = n - (6 * p - 3);
    return checked_add(8 * p - 3, half_3j_absj(j));
}

Term e_closed(Term n) {
    if (n < 1) throw InvalidParameters("e(n) defined for n >= 1");
    // segment k covers [3^k, 3^(k+1) - 1]
    Term p = 1;  // 3^k
    while (checked_sub(checked_mul(3, p), 1) < n) p = checked_mul(p, 3);
    Term j = n - 2 * p;
    return checked_add(checked_mul(3, p), checked_add(checked_mul(2, j), std::abs(j)));
}

Term f_closed(Term n, Term y, Term z) {
    if (y < 2 || (y + z) % 2 == 0 || y + z < 1 || 2 * y + z < 4)
        throw InvalidParameters("f(n; y, z) requires y >= 2, opposite parity, y+z >= 1, "
                                "2y+z >= 4");
    if (n < 1) throw InvalidParameters("f(n) defined for n >= 1");
    Term w0 = (y + z - 1) / 2;
    Term p = 1;  // y^k
    while (true) {
        // A = c1*y^k - z/(y-1), evaluated exactly
        Term numA = checked_sub(checked_mul(checked_mul(y + 1, y + z - 1), p), 2 * z);
        Term A = exact_div(numA, 2 * (y - 1));
        Term w = checked_mul(w0, p);
        if (n < checked_add(A, w)) {  // n <= A + w - 1
            Term j = n - A;
            Term numB = checked_sub(checked_mul(checked_mul(y + z - 1, p), y), z);
            Term B = exact_div(numB, y - 1);
            Term t = checked_add(checked_mul(y + 1, j), checked_mul(y - 1, std::abs(j)));
            return checked_add(B, exact_div(t, 2));
        }
        p = checked_mul(p, y);
    }
}

Term g_closed(Term n) {
    if (n < 1) throw InvalidParameters("g(n) defined for n >= 1");
    // segment k covers [2^(k+1) - 1, 2^(k+2) - 2]
    Term p = 1;
    while (checked_sub(checked_mul(4, p), 2) < n) p = checked_mul(p, 2);
    Term j = n - (3 * p - 1);
    return checked_add(4 * p - 1, half_3j_absj(j));
}

Term b_closed(Term n) {
    if (n < 1) throw InvalidParameters("b(n) defined for n >= 1");
    switch (n) {
        case 1: return 1;
        case 2: return 3;
        case 3: return 5;
        case 4: return 2;
        default: break;
    }
    switch (n % 4) {
        case 2: return checked_add(n, 2);                      // b(4t-2) = 4t
        case 3: return checked_sub(checked_mul(6, (n + 1) / 4), 3);
        case 0: return checked_sub(checked_mul(6, n / 4), 1);
        default: return checked_add(checked_mul(6, (n - 1) / 4), 1);
    }
}

Term dprime_closed(Term n) {
    if (n < 1) throw InvalidParameters("d'(n) defined for n >= 1");
    Term two_n = checked_mul(2, n);
    Term m = isqrt(two_n);
    // round(sqrt(2n)): m when 2n <= m^2 + m, else m+1. Equality 2n = m^2+m+1/4
    // would need 8n = (2m+1)^2, impossible, so the rounding is never a tie.
    Term r = (two_n <= m * m + m) ? m : m + 1;
    return checked_add(n, r);
}

GeneratedSequence golomb(std::size_t count) {
    std::vector<Term> g;
    g.reserve(count + 1);
    g.push_back(0);  // 1-based
    if (count >= 1) g.push_back(1);
    for (std::size_t n = 2; n <= count; ++n) {
        Term gn1 = g[n - 1];
        Term inner = g[static_cast<std::size_t>(gn1)];
        g.push_back(1 + g[static_cast<std::size_t>(static_cast<Term>(n) - inner)]);
    }
    g.erase(g.begin());
    return GeneratedSequence(1, std::move(g), Provenance{"golomb", false});
}

double golomb_estimate(Term n) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return std::pow(phi, 2.0 - phi) * std::pow(static_cast<double>(n), phi - 1.0);
}

}  // namespace aronson
