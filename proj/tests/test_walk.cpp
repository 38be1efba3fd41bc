#include <catch2/catch_amalgamated.hpp>

#include <circulant/checks.hpp>
#include <circulant/rng.hpp>
#include <circulant/walk.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

using circulant::BigRational;
using circulant::CirculantSpec;

TEST_CASE("closed-form first-passage times") {
    SECTION("complete graph: N-1 regardless of target") {
        for (int l = 1; l <= 4; ++l) {
            CHECK(circulant::fpt_closed(5, l) == BigRational(4));
        }
    }
    SECTION("octahedron") {
        CHECK(circulant::fpt_closed(6, 1) == BigRational(5));
        CHECK(circulant::fpt_closed(6, 3) == BigRational(6));
    }
    SECTION("symmetry") {
        for (int n = 5; n <= 60; ++n) {
            for (int l = 1; l < n; ++l) {
                REQUIRE(circulant::fpt_closed(n, l) == circulant::fpt_closed(n, n - l));
            }
        }
    }
    SECTION("domain") {
        CHECK_THROWS_AS(circulant::fpt_closed(4, 1), circulant::UnsupportedNError);
        CHECK_THROWS_AS(circulant::fpt_closed(8, 0), circulant::DomainError);
        CHECK_THROWS_AS(circulant::fpt_closed(8, 8), circulant::DomainError);
    }
}

TEST_CASE("general first-passage times via the spectral route") {
    SECTION("plain cycle: adjacent target costs N-1 steps") {
        for (int n : {3, 8, 21, 50}) {
            CHECK(circulant::fpt_general(CirculantSpec(n, {1}), 1) ==
                  Catch::Approx(static_cast<double>(n - 1)).epsilon(1e-10));
        }
    }
    CHECK(circulant::fpt_general(CirculantSpec(5, {1, 2}), 2) == Catch::Approx(4.0).epsilon(1e-10));
    CHECK(circulant::fpt_general(CirculantSpec(6, {1, 2}), 2) == Catch::Approx(5.0).epsilon(1e-10));

    SECTION("matches the closed form on the four-neighbor cycle") {
        for (int n = 5; n <= 100; ++n) {
            const CirculantSpec spec(n, {1, 2});
            for (int l = 1; l < n; ++l) {
                REQUIRE(circulant::fpt_general(spec, l) ==
                        Catch::Approx(circulant::to_double(circulant::fpt_closed(n, l)))
                            .epsilon(1e-9));
            }
        }
    }
    CHECK_THROWS_AS(circulant::fpt_general(CirculantSpec(6, {2}), 2),
                    circulant::DisconnectedError);
}

TEST_CASE("mean first-passage time") {
    CHECK(circulant::mfpt_closed(6) == BigRational(13, 3));
    CHECK(circulant::mfpt_closed(5) == BigRational(16, 5));
    CHECK_THROWS_AS(circulant::mfpt_closed(3), circulant::UnsupportedNError);

    SECTION("equality of Kirchhoff, mean-FPT, and eigentime routes") {
        for (int n = 5; n <= 100; ++n) {
            REQUIRE(circulant::check_mfpt_mean_fpt(n).pass);
            REQUIRE(circulant::check_mfpt_eigentime(n).pass);
        }
    }
    SECTION("spectral path equals the eigentime identity") {
        const CirculantSpec spec(12, {1, 2});
        CHECK(circulant::mfpt_spectral(spec) == circulant::eigentime_mfpt(spec));
    }
}

TEST_CASE("commute times") {
    for (int l = 1; l <= 4; ++l) {
        CHECK(circulant::commute_closed(5, l) == BigRational(8));
    }
    CHECK(circulant::commute_closed(6, 3) == BigRational(12));
    SECTION("cycle commute is 2 l (N-l)") {
        const int n = 30;
        const CirculantSpec cycle(n, {1});
        for (int l = 1; l < n; ++l) {
            REQUIRE(circulant::commute(cycle, l) ==
                    Catch::Approx(2.0 * l * (n - l)).epsilon(1e-10));
        }
    }
    SECTION("commute doubles the first-passage time") {
        for (int n : {7, 12, 25}) {
            for (int l = 1; l < n; ++l) {
                REQUIRE(circulant::commute_closed(n, l) ==
                        BigRational(2) * circulant::fpt_closed(n, l));
            }
        }
    }
}

TEST_CASE("hitting-time linear relation") {
    for (int n = 7; n <= 200; ++n) {
        REQUIRE(circulant::check_hitting_relation(n).pass);
    }
    SECTION("spelled out at N=7") {
        const BigRational lhs = BigRational(3) * circulant::fpt_closed(7, 1) -
                                circulant::fpt_closed(7, 2) - circulant::fpt_closed(7, 3);
        REQUIRE(lhs == BigRational(4));
    }
    CHECK_THROWS_AS(circulant::check_hitting_relation(6), circulant::DomainError);
}

TEST_CASE("trial streams are decorrelated and deterministic") {
    circulant::SplitMix64 a = circulant::trial_stream(42, 0);
    circulant::SplitMix64 b = circulant::trial_stream(42, 0);
    circulant::SplitMix64 c = circulant::trial_stream(42, 1);
    circulant::SplitMix64 d = circulant::trial_stream(43, 0);
    std::set<std::uint64_t> seen;
    bool c_differs = false;
    bool d_differs = false;
    for (int i = 0; i < 64; ++i) {
        const std::uint64_t va = a.next();
        REQUIRE(b.next() == va); // same key, same stream
        seen.insert(va);
        if (c.next() != va) c_differs = true;
        if (d.next() != va) d_differs = true;
    }
    CHECK(seen.size() == 64);
    CHECK(c_differs);
    CHECK(d_differs);

    SECTION("bounded draws cover the range uniformly enough to notice") {
        circulant::SplitMix64 rng(7);
        std::vector<int> counts(5, 0);
        for (int i = 0; i < 50'000; ++i) {
            const std::uint64_t v = rng.next_below(5);
            REQUIRE(v < 5);
            ++counts[static_cast<std::size_t>(v)];
        }
        for (int count : counts) {
            CHECK(count > 9'000);
            CHECK(count < 11'000);
        }
    }
}

TEST_CASE("Monte Carlo first-passage estimates") {
    SECTION("estimates land within four standard errors of the closed form") {
        for (int n : {6, 10}) {
            for (int l : {1, n / 2}) {
                const CirculantSpec spec(n, {1, 2});
                const circulant::McEstimate est = circulant::simulate_fpt(spec, l, 20'000, 42);
                const double expected = circulant::to_double(circulant::fpt_closed(n, l));
                REQUIRE(est.std_error > 0.0);
                REQUIRE(std::abs(est.mean - expected) <= 4.0 * est.std_error);
            }
        }
    }
    SECTION("identical seeds reproduce identical estimates") {
        const CirculantSpec spec(7, {1, 2});
        const circulant::McEstimate first = circulant::simulate_fpt(spec, 2, 5'000, 123);
        const circulant::McEstimate second = circulant::simulate_fpt(spec, 2, 5'000, 123);
        CHECK(first.mean == second.mean);
        CHECK(first.std_error == second.std_error);
        const circulant::McEstimate reseeded = circulant::simulate_fpt(spec, 2, 5'000, 124);
        CHECK(reseeded.mean != first.mean);
    }
    SECTION("a single trial is an exact reproducible step count") {
        const CirculantSpec spec(9, {1, 2});
        const circulant::McEstimate one = circulant::simulate_fpt(spec, 3, 1, 99);
        CHECK(one.trials == 1);
        CHECK(one.std_error == 0.0);
        CHECK(one.mean == std::floor(one.mean));
        CHECK(one.mean >= 1.0);
        CHECK(circulant::simulate_fpt(spec, 3, 1, 99).mean == one.mean);
    }
    SECTION("antipodal-jump graphs walk on the reduced neighbor set") {
        const CirculantSpec k4(4, {1, 2});
        const circulant::McEstimate est = circulant::simulate_fpt(k4, 2, 20'000, 42);
        // Complete graph: expected hitting time N-1 = 3.
        REQUIRE(std::abs(est.mean - 3.0) <= 4.0 * est.std_error);
    }
    SECTION("domain and error paths") {
        CHECK_THROWS_AS(circulant::simulate_fpt(CirculantSpec(6, {2}), 2, 10, 1),
                        circulant::DisconnectedError);
        CHECK_THROWS_AS(circulant::simulate_fpt(CirculantSpec(6, {1, 2}), 0, 10, 1),
                        circulant::DomainError);
        CHECK_THROWS_AS(circulant::simulate_fpt(CirculantSpec(6, {1, 2}), 1, 0, 1),
                        circulant::DomainError);
    }
}

TEST_CASE("walks that cannot terminate hit the step cap") {
    // Offsets {2,4} on 6 vertices never leave the even residues, so vertex 1
    // is unreachable and the cap must fire.
    const std::vector<int> offsets{2, 4};
    circulant::SplitMix64 rng = circulant::trial_stream(1, 0);
    CHECK_THROWS_AS(circulant::detail::walk_steps(offsets, 6, 1, rng, 1'000),
                    circulant::StepCapError);
    CHECK(circulant::kWalkStepCap == 1'000'000'000);
}
