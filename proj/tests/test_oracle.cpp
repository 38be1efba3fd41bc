#include <catch2/catch_amalgamated.hpp>

#include <circulant/oracle.hpp>

#include <cmath>
#include <string>
#include <vector>

using circulant::CirculantSpec;
using circulant::GroundedSolver;

TEST_CASE("grounded solve reproduces known resistances") {
    CHECK(circulant::resistance_solve(circulant::dense_laplacian(CirculantSpec(4, {1})), 0, 2) ==
          Catch::Approx(1.0).margin(1e-12));
    CHECK(circulant::resistance_solve(circulant::dense_laplacian(CirculantSpec(5, {1, 2})), 0, 1) ==
          Catch::Approx(0.4).margin(1e-12));
    CHECK(circulant::resistance_solve(circulant::dense_laplacian(CirculantSpec(6, {1, 2})), 0, 3) ==
          Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("grounded solve is symmetric and metric") {
    const GroundedSolver solver(circulant::dense_laplacian(CirculantSpec(12, {1, 3})));
    SECTION("symmetry, including pairs touching the grounded vertex") {
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) {
                if (i == j) continue;
                REQUIRE(std::abs(solver.resistance(i, j) - solver.resistance(j, i)) <= 1e-12);
            }
        }
    }
    SECTION("triangle inequality on all vertex triples") {
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) {
                for (int k = 0; k < 12; ++k) {
                    if (i == j || j == k || i == k) continue;
                    REQUIRE(solver.resistance(i, k) <=
                            solver.resistance(i, j) + solver.resistance(j, k) + 1e-12);
                }
            }
        }
    }
    SECTION("positivity") {
        for (int j = 1; j < 12; ++j) REQUIRE(solver.resistance(0, j) > 0.0);
    }
}

TEST_CASE("grounded solve rejects bad input") {
    CHECK_THROWS_AS(GroundedSolver(circulant::dense_laplacian(CirculantSpec(6, {2}))),
                    circulant::DisconnectedError);
    CHECK_THROWS_AS(GroundedSolver(circulant::dense_laplacian(CirculantSpec(6, {3}))),
                    circulant::DisconnectedError);
    const GroundedSolver solver(circulant::dense_laplacian(CirculantSpec(7, {1, 2})));
    CHECK_THROWS_AS(solver.resistance(2, 2), circulant::DomainError);
    CHECK_THROWS_AS(solver.resistance(0, 7), circulant::DomainError);
    CHECK_THROWS_AS(solver.resistance(-1, 2), circulant::DomainError);
}

TEST_CASE("Foster audit sums edge resistances to N-1") {
    SECTION("octahedron: 12 edges of 5/12 each") {
        const circulant::VerificationReport report = foster_audit(CirculantSpec(6, {1, 2}));
        REQUIRE(report.size() == 1);
        CHECK(report.all_pass());
        CHECK(report.checks()[0].lhs == Catch::Approx(5.0).margin(1e-9));
        CHECK(report.checks()[0].name.find("foster-audit") == 0);
    }
    SECTION("plain cycles are exact") {
        for (int n : {3, 10, 41}) {
            const circulant::VerificationReport report = foster_audit(CirculantSpec(n, {1}));
            CHECK(report.all_pass());
            CHECK(report.checks()[0].lhs == Catch::Approx(n - 1.0).margin(1e-9));
        }
    }
    SECTION("four-neighbor cycles across sizes, antipodal case included") {
        for (int n = 5; n <= 30; ++n) {
            REQUIRE(foster_audit(CirculantSpec(n, {1, 2})).all_pass());
        }
        REQUIRE(foster_audit(CirculantSpec(4, {1, 2})).all_pass()); // complete graph
        REQUIRE(foster_audit(CirculantSpec(8, {1, 4})).all_pass());
    }
    CHECK_THROWS_AS(foster_audit(CirculantSpec(9, {3})), circulant::DisconnectedError);
}

TEST_CASE("Kirchhoff index from pairwise solves matches the spectrum") {
    CHECK(circulant::kirchhoff_solve(CirculantSpec(6, {1, 2})) == Catch::Approx(6.5).epsilon(1e-9));
    for (int n = 5; n <= 60; n += 5) {
        for (const auto& jumps : {std::vector<int>{1, 2}, std::vector<int>{1, 3}}) {
            if (2 * jumps.back() > n) continue; // jump set does not fit this order
            const CirculantSpec spec(n, jumps);
            REQUIRE(circulant::kirchhoff_solve(spec) ==
                    Catch::Approx(circulant::kirchhoff_spectral(spec)).epsilon(1e-7));
        }
    }
    CHECK_THROWS_AS(circulant::kirchhoff_solve(CirculantSpec(8, {2})),
                    circulant::DisconnectedError);
}

TEST_CASE("equivalence sweep cross-validates every route") {
    SECTION("four-neighbor cycles and second-neighbor graphs, N = 5..60") {
        const circulant::VerificationReport report =
            circulant::equivalence_sweep(5, 60, {{1, 2}, {2}});
        REQUIRE(report.all_pass());
        REQUIRE(report.worst_residual() <= 1e-9);

        bool saw_closed = false;
        bool saw_disconnected = false;
        bool saw_half_cycle = false;
        for (const circulant::CheckResult& check : report.checks()) {
            if (check.name.find("closed-vs-solve") == 0) saw_closed = true;
            if (check.name.find("disconnected-detected") == 0) saw_disconnected = true;
            if (check.name.find("c2-vs-half-cycle-solve") == 0) saw_half_cycle = true;
        }
        CHECK(saw_closed);
        CHECK(saw_disconnected);
        CHECK(saw_half_cycle);
    }
    SECTION("plain cycles") {
        REQUIRE(circulant::equivalence_sweep(3, 40, {{1}}).all_pass());
    }
    SECTION("jump sets without a closed form still cross-check the numeric routes") {
        const circulant::VerificationReport report =
            circulant::equivalence_sweep(7, 20, {{1, 3}, {2, 3}});
        REQUIRE(report.all_pass());
        for (const circulant::CheckResult& check : report.checks()) {
            REQUIRE(check.name.find("closed-vs") == std::string::npos);
        }
    }
    SECTION("sizes that cannot host the jumps are skipped, not failed") {
        const circulant::VerificationReport report = circulant::equivalence_sweep(3, 4, {{1, 2}});
        REQUIRE(report.size() == 1); // only n=4 supports jump 2
        REQUIRE(report.all_pass());
    }
}
