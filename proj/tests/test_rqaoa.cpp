#include <doctest.h>

#include <cmath>

#include "qaoa/analytic.hpp"
#include "qaoa/rqaoa.hpp"

using namespace qaoa;

TEST_CASE("is_uniform_complete") {
    SUBCASE("fresh K6") {
        const auto uniform = is_uniform_complete(complete_model(6));
        REQUIRE(uniform.has_value());
        CHECK(uniform->first == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(uniform->second == -0.5);
    }
    SUBCASE("K6 after one contraction stays uniform complete") {
        const auto [reduced, record] = contract(complete_model(6), 1, 0, -1);
        const auto uniform = is_uniform_complete(reduced);
        REQUIRE(uniform.has_value());
        CHECK(uniform->first == std::vector<int>{2, 3, 4, 5});
        CHECK(uniform->second == -0.5);
    }
    SUBCASE("path graph is not complete") {
        CHECK(!is_uniform_complete(parse_edge_list("0 1\n1 2\n")));
    }
    SUBCASE("non-uniform weights") {
        CHECK(!is_uniform_complete(
            maxcut_model({{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 2.0}})));
    }
}

TEST_CASE("rqaoa_round on K6") {
    const IsingModel k6 = complete_model(6);
    for (const auto source :
         {CorrelationSource::statevector, CorrelationSource::analytic}) {
        CAPTURE(static_cast<int>(source));
        RqaoaConfig config;
        config.correlations = source;
        const auto [contracted, record, trace] = rqaoa_round(k6, config);

        // All 15 correlations coincide, so the lexicographic tie-break picks
        // (0,1); the negative sign eliminates 1 into 0.
        CHECK(record == ConstraintRecord{1, 0, -1});
        CHECK(trace.sign == -1);
        CHECK(trace.correlation < 0.0);
        CHECK(trace.active_before == 6);
        CHECK(trace.active_after == 4);

        CHECK(contracted.offset() == 8.0);
        CHECK(contracted.vertices() == std::vector<int>{0, 2, 3, 4, 5});
        CHECK(contracted.non_isolated() == std::vector<int>{2, 3, 4, 5});
        CHECK(contracted.couplings().size() == 6);
        for (int i = 2; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                CHECK(contracted.coupling(i, j) == -0.5);

        if (source == CorrelationSource::analytic) {
            CHECK(trace.provider == "analytic");
            const GammaProfile profile = maximize_f(3);
            CHECK(trace.correlation ==
                  doctest::Approx(edge_correlation(3, profile.gamma,
                                                   profile.beta_star))
                      .epsilon(1e-12));
            CHECK(trace.expectation ==
                  doctest::Approx(15.0 * (0.5 + profile.f_value))
                      .epsilon(1e-12));
        } else {
            CHECK(trace.provider == "statevector");
        }
    }
}

TEST_CASE("rqaoa_round solves a single edge exactly") {
    const IsingModel edge = maxcut_model({{0, 1, 1.0}});
    const auto [contracted, record, trace] = rqaoa_round(edge, {});
    CHECK(trace.provider == "statevector");  // too small for the closed form
    CHECK(trace.correlation == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(record == ConstraintRecord{1, 0, -1});
    CHECK(contracted.couplings().empty());
    CHECK(contracted.offset() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate correlations abort the round") {
    RqaoaConfig config;
    config.forced_schedule = ParameterSchedule{1, {0.0}, {0.0}};  // |+>^n
    CHECK_THROWS_AS(rqaoa_round(complete_model(6), config),
                    DegenerateCorrelationError);

    CHECK_THROWS_AS(rqaoa_round(IsingModel({0, 1}, {}, 0.0), {}),
                    NothingToContractError);
}

TEST_CASE("run_rqaoa is exact on complete graphs") {
    SUBCASE("K4 down to a 2-vertex residual") {
        RqaoaConfig config;
        config.threshold = 2;
        config.correlations = CorrelationSource::statevector;
        const RqaoaSolution solution = run_rqaoa(complete_model(4), config);
        CHECK(solution.value == 4.0);
        REQUIRE(solution.optimum.has_value());
        CHECK(*solution.optimum == 4.0);
        CHECK(*solution.ratio == 1.0);
        CHECK(solution.traces.size() == 1);
    }
    SUBCASE("K8 with statevector correlations") {
        RqaoaConfig config;
        config.threshold = 4;
        config.correlations = CorrelationSource::statevector;
        const RqaoaSolution solution = run_rqaoa(complete_model(8), config);
        CHECK(solution.value == 16.0);
        CHECK(*solution.ratio == 1.0);
        CHECK(solution.traces.size() == 2);
        for (const auto& trace : solution.traces)
            CHECK(trace.active_before - trace.active_after == 2);
    }
    SUBCASE("larger graphs through the analytic provider") {
        for (int two_n : {14, 20}) {
            RqaoaConfig config;
            config.threshold = 4;
            config.correlations = CorrelationSource::analytic;
            const RqaoaSolution solution =
                run_rqaoa(complete_model(two_n), config);
            const double n = two_n / 2.0;
            CHECK(solution.value == n * n);
            for (const auto& trace : solution.traces)
                CHECK(trace.provider == "analytic");
        }
    }
}

TEST_CASE("providers agree on complete graphs") {
    for (int two_n : {6, 8, 10, 12}) {
        CAPTURE(two_n);
        RqaoaConfig analytic;
        analytic.threshold = 4;
        analytic.correlations = CorrelationSource::analytic;
        RqaoaConfig statevector = analytic;
        statevector.correlations = CorrelationSource::statevector;

        const RqaoaSolution a = run_rqaoa(complete_model(two_n), analytic);
        const RqaoaSolution s = run_rqaoa(complete_model(two_n), statevector);

        CHECK(a.value == s.value);
        CHECK(a.assignment == s.assignment);
        REQUIRE(a.traces.size() == s.traces.size());
        for (std::size_t r = 0; r < a.traces.size(); ++r) {
            CHECK(a.traces[r].eliminated == s.traces[r].eliminated);
            CHECK(a.traces[r].surviving == s.traces[r].surviving);
            CHECK(a.traces[r].sign == s.traces[r].sign);
        }
        CHECK(a.stack.records() == s.stack.records());
    }
}

TEST_CASE("auto provider prefers the closed form when it applies") {
    RqaoaConfig config;
    config.threshold = 4;
    const RqaoaSolution solution = run_rqaoa(complete_model(10), config);
    CHECK(solution.value == 25.0);
    for (const auto& trace : solution.traces)
        CHECK(trace.provider == "analytic");

    // A non-complete graph must fall back to the simulator even when the
    // analytic source is requested explicitly.
    RqaoaConfig explicit_analytic;
    explicit_analytic.threshold = 2;
    explicit_analytic.correlations = CorrelationSource::analytic;
    const IsingModel path = parse_edge_list("0 1 1.5\n1 2\n2 3 0.5\n");
    const RqaoaSolution fallback = run_rqaoa(path, explicit_analytic);
    for (const auto& trace : fallback.traces)
        CHECK(trace.provider == "statevector");
}

TEST_CASE("general graphs run to completion, one elimination per round") {
    // Dominant weights steer round 1 to (2,3) and round 2 to (1,2), so the
    // survivor of round 1 is itself eliminated later; the stack rewrite keeps
    // reconstruction single-hop.
    const IsingModel m =
        maxcut_model({{2, 3, 10.0}, {1, 2, 5.0}, {0, 1, 2.0}});
    RqaoaConfig config;
    config.threshold = 2;
    const RqaoaSolution solution = run_rqaoa(m, config);
    CHECK(solution.assignment.size() == 4);
    CHECK(solution.value == energy(m, solution.assignment));
    REQUIRE(solution.traces.size() == 2);
    CHECK(solution.traces[0].active_before -
              solution.traces[0].active_after == 1);
    REQUIRE(solution.optimum.has_value());
    CHECK(solution.value == *solution.optimum);  // exact on this instance
}

TEST_CASE("positive correlations round with sign +1") {
    // A negative-weight edge is best left uncut: M = +1 at the optimum.
    const IsingModel m = maxcut_model({{0, 1, -2.0}});
    const auto [contracted, record, trace] = rqaoa_round(m, {});
    CHECK(trace.correlation == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(record == ConstraintRecord{1, 0, 1});
    CHECK(contracted.offset() == doctest::Approx(0.0).epsilon(1e-12));

    RqaoaConfig config;
    config.threshold = 2;
    const RqaoaSolution solution = run_rqaoa(m, config);
    CHECK(solution.value == 0.0);
    CHECK(*solution.optimum == 0.0);
    CHECK(!solution.ratio.has_value());  // optimum 0 has no ratio
    CHECK(solution.assignment.at(0) == solution.assignment.at(1));
}

TEST_CASE("disconnected graphs contract component by component") {
    const IsingModel m = parse_edge_list("0 1\n2 3\n");
    RqaoaConfig config;
    config.threshold = 2;
    const RqaoaSolution solution = run_rqaoa(m, config);
    CHECK(solution.value == 2.0);
    CHECK(*solution.ratio == 1.0);
    REQUIRE(solution.traces.size() == 1);
    // both edges tie at M = -1; lexicographic pick is (0,1)
    CHECK(solution.traces[0].eliminated == 1);
    CHECK(solution.traces[0].surviving == 0);
}

TEST_CASE("traces are reproducible") {
    RqaoaConfig config;
    config.threshold = 4;
    config.correlations = CorrelationSource::statevector;
    const RqaoaSolution a = run_rqaoa(complete_model(8), config);
    const RqaoaSolution b = run_rqaoa(complete_model(8), config);
    CHECK(a.traces == b.traces);
    CHECK(a.assignment == b.assignment);
    CHECK(a.value == b.value);

    RqaoaConfig seeded = config;
    seeded.tie_break = TieBreak::seeded_random;
    seeded.seed = 7;
    const RqaoaSolution c = run_rqaoa(complete_model(8), seeded);
    const RqaoaSolution d = run_rqaoa(complete_model(8), seeded);
    CHECK(c.traces == d.traces);
    CHECK(c.value == 16.0);  // any tie choice still lands on a maximum cut
}

TEST_CASE("run_rqaoa configuration validation") {
    RqaoaConfig bad_threshold;
    bad_threshold.threshold = 1;
    CHECK_THROWS_AS(run_rqaoa(complete_model(4), bad_threshold), DomainError);

    RqaoaConfig beyond_cap;
    beyond_cap.threshold = 30;
    beyond_cap.brute_force_cap = 26;
    CHECK_THROWS_AS(run_rqaoa(complete_model(4), beyond_cap), SizeLimitError);

    RqaoaConfig bad_level;
    bad_level.level = 0;
    CHECK_THROWS_AS(run_rqaoa(complete_model(4), bad_level), DomainError);
}
