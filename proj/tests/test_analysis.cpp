#include <doctest.h>

#include <cmath>

#include "aronson/analysis.hpp"
#include "aronson/registry.hpp"

using namespace aronson;

TEST_CASE("average density constant") {
    double v = average_density_constant();
    CHECK(std::abs(v - 0.7075) < 5e-5);
    CHECK(0.75 - v == doctest::Approx(0.25 * std::log(32.0 / 27.0)));
    // base-10 logarithm is ruled out by the 4-d.p. value
    CHECK(std::abs((0.75 - 0.25 * std::log10(32.0 / 27.0)) - 0.7075) > 1e-2);
}

TEST_CASE("density profile of segment 10") {
    auto a = registry_lookup("a").generate(static_cast<std::size_t>(12) << 10);
    auto p = density_profile(a, 10);
    CHECK(std::abs(p.max_ratio - 0.75) < 1e-3);
    CHECK(std::abs(p.min_ratio - 2.0 / 3.0) < 1e-3);
    CHECK(p.min_ratio <= p.mean_ratio);
    CHECK(p.mean_ratio <= p.max_ratio);
    // extrema sit at the segment boundary and midpoint
    Term k2 = Term{1} << 10;
    CHECK(p.max_at == 9 * k2 - 3);
    CHECK((p.min_at == 6 * k2 - 3 || p.min_at == 12 * k2 - 4));
    CHECK(p.stride == 1);
}

TEST_CASE("density profile mean approaches the constant") {
    auto a = registry_lookup("a").generate(static_cast<std::size_t>(12) << 15);
    auto p = density_profile(a, 15);
    CHECK(std::abs(p.mean_ratio - 0.70753) < 1e-3);
    CHECK(std::abs(p.mean_ratio - average_density_constant()) < 1e-4);
}

TEST_CASE("density profile requires the whole segment") {
    auto a = registry_lookup("a").generate(100);
    CHECK_THROWS_AS(density_profile(a, 10), HorizonExceeded);
}

TEST_CASE("sampled mean tightens by segment 18") {
    auto a = registry_lookup("a").generate(static_cast<std::size_t>(12) << 18);
    auto p = density_profile(a, 18);
    CHECK(p.stride == 1);  // 18 is the last exactly-summed segment
    CHECK(std::abs(p.mean_ratio - average_density_constant()) < 5e-4);
}

TEST_CASE("verify_identity: named examples") {
    CHECK(verify_identity("c_shift", 10000).pass);
    CHECK(verify_identity("somos_e", 10000).pass);
    CHECK(verify_identity("a_odd_membership", 100000).pass);
    CHECK_THROWS_AS(verify_identity("no_such_identity", 10), UnknownIdentity);
}

TEST_CASE("report line format") {
    auto r = verify_identity("dprime_parity", 500);
    CHECK(r.line() == "dprime_parity,500,PASS");
    IdentityReport fake{"x", 10, false, 7, ""};
    CHECK(fake.line() == "x,10,FAIL@7");
}

TEST_CASE("verify_all runs every identity") {
    auto reports = verify_all(300, 4);
    CHECK(reports.size() == identity_names().size());
    for (auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
}
