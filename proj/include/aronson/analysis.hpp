#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aronson/sequence.hpp"

namespace aronson {

// Ratio statistics of n/a(n) over the k-th segment of A079000
// (indexes 6*2^k - 3 .. 12*2^k - 4).
struct DensityProfile {
    int k = 0;
    double min_ratio = 0;
    double max_ratio = 0;
    double mean_ratio = 0;
    Term min_at = 0;  // index achieving the minimum
    Term max_at = 0;
    Term stride = 1;  // mean uses every stride-th index (1 = exact summation)
};

// `seq` must materialize the whole segment (HorizonExceeded otherwise).
// min/max are located by exact rational comparison; the mean sums every
// index up to k = 18 and strides 2^(k-18) beyond.
DensityProfile density_profile(const GeneratedSequence& seq, int k);

// 3/4 - (1/4) ln(32/27) = 0.70752...; the limit of the segment-average of
// n/a(n). The logarithm is the natural one: 0.7075 matches, the base-10
// value 0.7315 does not.
double average_density_constant();

struct IdentityReport {
    std::string name;
    Term horizon = 0;
    bool pass = false;
    Term fail_at = -1;
    std::string detail;

    // "name,horizon,PASS" or "name,horizon,FAIL@n"
    std::string line() const;
};

// Run one named identity over [n0, horizon]; UnknownIdentity for names not
// in identity_names().
IdentityReport verify_identity(std::string_view name, Term horizon);

std::vector<std::string> identity_names();

// All identities, fanned out over `jobs` worker threads (0 = hardware
// concurrency). Verifiers are independent and share no mutable state.
std::vector<IdentityReport> verify_all(Term horizon, unsigned jobs = 0);

}  // namespace aronson
