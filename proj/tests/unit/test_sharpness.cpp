#include <gtest/gtest.h>

#include "gruss/sharpness.hpp"

using namespace gruss;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

SharpnessProblem problem(SharpBound b, std::size_t n = 2, std::size_t d = 1) {
    SharpnessProblem pb;
    pb.bound = b;
    pb.n = n;
    pb.d = d;
    return pb;
}

}  // namespace

TEST(Sharpness, IdsRoundTrip) {
    for (auto b : kAllSharpBounds) EXPECT_EQ(parse_sharp_bound(to_string(b)), b);
    EXPECT_EQ(code_of([] { (void)parse_sharp_bound("nope"); }), ErrorCode::UnknownBoundId);
    EXPECT_DOUBLE_EQ(claimed_constant(SharpBound::UniformMaxMax), 1.0 / 12.0);
    EXPECT_DOUBLE_EQ(claimed_constant(SharpBound::UniformHolder), 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(claimed_constant(SharpBound::PseudoVariance), 0.25);
}

TEST(Witness, AllWitnessedBoundsHaveRatioOne) {
    for (auto b : kWitnessedBounds) {
        for (std::size_t n : {2u, 5u}) {
            const auto pb = problem(b, n, 3);
            const auto w = analytic_witness(pb);
            EXPECT_EQ(w.expected_ratio, 1.0);
            EXPECT_NEAR(evaluate_ratio(pb, w.instance), 1.0, 1e-12) << to_string(b) << " n=" << n;
        }
    }
}

TEST(Witness, ScalarDiskFamilyIsTightForEveryFirstWeight) {
    for (double p1 : {0.1, 0.5, 0.9}) {
        auto pb = problem(SharpBound::ScalarDisk);
        pb.radius = 2.5;
        EXPECT_NEAR(evaluate_ratio(pb, analytic_witness(pb, p1).instance), 1.0, 1e-12) << p1;
    }
}

TEST(Witness, ClassicalBoundsHaveNone) {
    EXPECT_EQ(code_of([] { (void)analytic_witness(problem(SharpBound::ClassicalMaxMax)); }), ErrorCode::NoKnownWitness);
    EXPECT_EQ(code_of([] { (void)analytic_witness(problem(SharpBound::ScalarDisk, 1)); }), ErrorCode::NoKnownWitness);
}

// Arithmetic alpha and x at n = 2 attain the 1/12 constant.
TEST(Witness, UniformMaxMaxArithmeticInstance) {
    const auto pb = problem(SharpBound::UniformMaxMax);
    Instance in{{0.5, 0.5}, {0.0, 1.0}, {Vec{0.0}, Vec{1.0}}};
    double gap = 0, bound = 0;
    EXPECT_NEAR(evaluate_ratio(pb, in, &gap, &bound), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(gap, 0.25);
    EXPECT_DOUBLE_EQ(bound, 0.25);
}

TEST(Search, FindsScalarDiskEquality) {
    const auto r = search_max_ratio(problem(SharpBound::ScalarDisk), 1000, 8, 0);
    EXPECT_GE(r.best_ratio, 0.999);
    EXPECT_LE(r.best_ratio, 1 + 1e-9);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_EQ(r.seed, 0u);
}

TEST(Search, UniformMaxMaxAtTwoPoints) {
    const auto r = search_max_ratio(problem(SharpBound::UniformMaxMax), 1000, 8, 3);
    EXPECT_GE(r.best_ratio, 0.999);
    EXPECT_LE(r.best_ratio, 1 + 1e-9);
}

TEST(Search, NeverBelowWitness) {
    for (auto b : kWitnessedBounds) {
        const auto pb = problem(b, 4, 2);
        const auto r = search_max_ratio(pb, 200, 2, 9);
        EXPECT_GE(r.best_ratio, evaluate_ratio(pb, analytic_witness(pb).instance));
    }
}

TEST(Search, SoundForEveryBound) {
    for (auto b : kAllSharpBounds) {
        for (auto norm : {NormFamily::L1, NormFamily::LInf}) {
            auto pb = problem(b, 4, 2);
            pb.norm = norm;
            pb.holder_p = 3.0;
            const auto r = search_max_ratio(pb, 300, 3, 5);
            EXPECT_EQ(r.violations, 0u) << to_string(b);
            EXPECT_LE(r.best_ratio, 1 + 1e-9) << to_string(b);
            EXPECT_EQ(r.iterations, 3u * 301u);
        }
    }
}

TEST(Search, Deterministic) {
    auto pb = problem(SharpBound::ClassicalHolder, 5, 2);
    const auto a = search_max_ratio(pb, 400, 4, 77);
    const auto b = search_max_ratio(pb, 400, 4, 77);
    EXPECT_EQ(a.best_inputs, b.best_inputs);
    EXPECT_EQ(a.best_ratio, b.best_ratio);
    EXPECT_EQ(a.best_restart, b.best_restart);
    const auto c = search_max_ratio(pb, 400, 4, 78);
    EXPECT_NE(a.best_inputs, c.best_inputs);
}

TEST(Search, Infeasible) {
    auto pb = problem(SharpBound::ScalarDisk);
    pb.radius = 0.0;
    EXPECT_EQ(code_of([&] { (void)search_max_ratio(pb, 10, 1, 0); }), ErrorCode::InfeasibleProblem);
    EXPECT_EQ(code_of([] { (void)search_max_ratio(problem(SharpBound::ClassicalSumSum, 1), 10, 1, 0); }),
              ErrorCode::InfeasibleProblem);
    EXPECT_EQ(code_of([] { (void)search_max_ratio(problem(SharpBound::ScalarDisk), 10, 0, 0); }),
              ErrorCode::InvalidParameter);
}

TEST(Report, DefaultConfigAttainsAllWitnessedConstants) {
    const auto rows = sharpness_report(SharpnessConfig{});
    ASSERT_EQ(rows.size(), kWitnessedBounds.size());
    for (const auto& r : rows) {
        EXPECT_EQ(r.verdict, Verdict::Attained) << to_string(r.bound);
        ASSERT_TRUE(r.witness_ratio.has_value());
        EXPECT_NEAR(*r.witness_ratio, 1.0, 1e-12);
    }
}

TEST(Report, ZeroBudgetKeepsWitnessRatios) {
    SharpnessConfig cfg;
    cfg.budget = 0;
    cfg.restarts = 1;
    for (const auto& r : sharpness_report(cfg)) {
        EXPECT_NEAR(r.searched_ratio, 1.0, 1e-12);
        EXPECT_EQ(r.verdict, Verdict::Attained);
    }
}

TEST(Report, NoViolationsAcrossAllBounds) {
    SharpnessConfig cfg;
    cfg.bounds.assign(kAllSharpBounds.begin(), kAllSharpBounds.end());
    cfg.n = 3;
    cfg.budget = 200;
    cfg.restarts = 2;
    for (const auto& r : sharpness_report(cfg)) EXPECT_NE(r.verdict, Verdict::Violation) << to_string(r.bound);
}
