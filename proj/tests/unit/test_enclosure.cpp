#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gruss/enclosure.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace gruss;

TEST(DiskCheck, CenterOfDisk) {
    const Scalar a(1, 2), A(-3, 5);
    const auto c = disk_equivalence_check((a + A) / 2.0, a, A);
    EXPECT_NEAR(c.re_form, 0.25 * std::norm(A - a), 1e-14);
    EXPECT_NEAR(c.disk_form, 0.25 * std::norm(A - a), 1e-14);
    EXPECT_TRUE(c.member);
}

TEST(DiskCheck, BoundaryPoint) {
    const auto c = disk_equivalence_check(Scalar(1, 2), Scalar(1, 2), Scalar(4, -2));
    EXPECT_EQ(c.re_form, 0.0);
    EXPECT_TRUE(c.member);
}

// (2 - 3)(3 - 0) = -3 and 1 - |3 - 1|^2 = -3.
TEST(DiskCheck, OutsidePoint) {
    const auto c = disk_equivalence_check(3.0, 0.0, 2.0);
    EXPECT_DOUBLE_EQ(c.re_form, -3.0);
    EXPECT_DOUBLE_EQ(c.disk_form, -3.0);
    EXPECT_FALSE(c.member);
}

TEST(DiskCheck, IdentityOnRandomTriples) {
    fuzz::Generator g(31);
    for (int t = 0; t < 10000; ++t) {
        const Scalar z(g.uniform(-10, 10), g.uniform(-10, 10));
        const Scalar a(g.uniform(-10, 10), g.uniform(-10, 10));
        const Scalar A(g.uniform(-10, 10), g.uniform(-10, 10));
        const auto c = disk_equivalence_check(z, a, A);
        ASSERT_LE(std::abs(c.re_form - c.disk_form), 1e-12 * (1 + std::abs(c.re_form)));
    }
}

TEST(Enclosure, Conversions) {
    const Segment s{Scalar(0), Scalar(2, 2)};
    const Disk d = to_disk(s);
    EXPECT_EQ(d.center, Scalar(1, 1));
    EXPECT_DOUBLE_EQ(d.radius, std::sqrt(2.0));
    const Disk back = to_disk(to_segment(d));
    EXPECT_NEAR(std::abs(back.center - d.center), 0.0, 1e-15);
    EXPECT_NEAR(back.radius, d.radius, 1e-15);
    const Ball b = to_ball(Interval{-1, 3});
    EXPECT_EQ(b.center, Vec{Scalar(1)});
    EXPECT_EQ(b.radius, 2.0);
    EXPECT_EQ(b.space.field(), ScalarField::Real);
}

TEST(Enclosure, Validation) {
    EXPECT_THROW(validate(Disk{0.0, -1.0}), Error);
    EXPECT_THROW(validate(Interval{2.0, 1.0}), Error);
    EXPECT_THROW(validate(Segment{Scalar(std::nan("")), 0.0}), Error);
    EXPECT_THROW(validate(Ball{Vec{0.0}, 1.0, NormedSpace::make(2, NormFamily::L2)}), Error);
    EXPECT_NO_THROW(validate(Interval{1.0, 1.0}));
}

TEST(Enclosure, Membership) {
    EXPECT_TRUE(contains(Disk{0.0, 1.0}, Scalar(0.6, 0.8)));
    EXPECT_FALSE(contains(Disk{0.0, 1.0}, Scalar(0.6, 0.81)));
    EXPECT_TRUE(contains(Interval{0, 1}, 1.0 + 5e-13));
    EXPECT_FALSE(contains(Interval{0, 1}, Scalar(0.5, 1e-3)));
    EXPECT_TRUE(contains(Segment{0.0, 2.0}, Scalar(1, 1)));
    EXPECT_FALSE(contains(Segment{0.0, 2.0}, Scalar(1, 1.01)));
    const auto sp = NormedSpace::make(2, NormFamily::L1);
    EXPECT_TRUE(contains(Ball{Vec{0.0, 0.0}, 1.0, sp}, Vec{0.5, -0.5}));
    EXPECT_FALSE(contains(Ball{Vec{0.0, 0.0}, 1.0, sp}, Vec{0.5, -0.6}));
    const ScalarSeq s{0.0, 0.5, 3.0};
    EXPECT_EQ(first_outside(Disk{0.0, 1.0}, s), 2u);
}

TEST(EncloseScalars, TwoPoints) {
    for (auto m : {EncloseMethod::MinDisk, EncloseMethod::MeanMax}) {
        const Disk d = enclose_scalars(ScalarSeq{0.0, 2.0}, m);
        EXPECT_EQ(d.center, Scalar(1));
        EXPECT_DOUBLE_EQ(d.radius, 1.0);
    }
}

TEST(EncloseScalars, IdenticalPoints) {
    const Disk d = enclose_scalars(ScalarSeq(3, Scalar(1)));
    EXPECT_EQ(d.center, Scalar(1));
    EXPECT_EQ(d.radius, 0.0);
}

TEST(EncloseScalars, ThreePoints) {
    const Disk d = enclose_scalars(ScalarSeq{0.0, 2.0, Scalar(1, 1)});
    const auto ref = oracle::brute_force_min_disk({0.0, 2.0, Scalar(1, 1)});
    EXPECT_NEAR(d.radius, 1.0, 1e-14);
    EXPECT_NEAR(std::abs(d.center - Scalar(1)), 0.0, 1e-14);
    EXPECT_NEAR(d.radius, ref.radius, 1e-14);
}

TEST(EncloseScalars, EmptyIsAnError) { EXPECT_THROW((void)enclose_scalars(ScalarSeq{}), Error); }

TEST(EncloseScalars, MatchesBruteForce) {
    fuzz::Generator g(32);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = g.size(1, 25);
        ScalarSeq pts(n);
        for (auto& z : pts) z = g.coin() ? Scalar(g.uniform(-5, 5), g.uniform(-5, 5)) : g.in_disk(1.0, 3.0);
        if (t % 10 == 0) pts.resize(std::max<std::size_t>(1, n / 2), Scalar(0.5, 0.5));
        const Disk d = enclose_scalars(pts);
        const auto ref = oracle::brute_force_min_disk(pts);
        EXPECT_NEAR(d.radius, ref.radius, 1e-9 * (1 + ref.radius));
        for (const auto& z : pts) EXPECT_TRUE(contains(d, z));
    }
}

TEST(EncloseScalars, CollinearAndCocircular) {
    const ScalarSeq line{0.0, 1.0, 2.0, 3.0, 4.0};
    EXPECT_NEAR(enclose_scalars(line).radius, 2.0, 1e-15);
    ScalarSeq ring;
    for (int k = 0; k < 12; ++k) ring.push_back(std::polar(2.0, k * 0.5235987755982988));
    const Disk d = enclose_scalars(ring);
    EXPECT_NEAR(d.radius, 2.0, 1e-12);
    EXPECT_NEAR(std::abs(d.center), 0.0, 1e-12);
}

TEST(EncloseScalars, MinDiskNeverLargerThanMeanMax) {
    fuzz::Generator g(33);
    for (int t = 0; t < 2000; ++t) {
        const auto pts = g.scalars(g.size(1, 40), g.coin() ? ScalarField::Complex : ScalarField::Real, 10.0);
        const double r1 = enclose_scalars(pts, EncloseMethod::MinDisk).radius;
        const double r2 = enclose_scalars(pts, EncloseMethod::MeanMax).radius;
        EXPECT_LE(r1, r2 * (1 + 1e-12));
    }
}

TEST(EncloseScalars, DeterministicForSameInput) {
    fuzz::Generator g(34);
    const auto pts = g.scalars(200, ScalarField::Complex);
    const Disk a = enclose_scalars(pts), b = enclose_scalars(pts);
    EXPECT_EQ(a.center, b.center);
    EXPECT_EQ(a.radius, b.radius);
}

TEST(EncloseVectors, Examples) {
    const auto sp1 = NormedSpace::make(1, NormFamily::L2);
    const Ball b = enclose_vectors(VectorSeq::from_real(sp1, {{0}, {2}}));
    EXPECT_EQ(b.center, Vec{Scalar(1)});
    EXPECT_DOUBLE_EQ(b.radius, 1.0);
    EXPECT_EQ(enclose_vectors(VectorSeq::from_real(sp1, {{5}})).radius, 0.0);

    const auto l1 = NormedSpace::make(2, NormFamily::L1);
    const Ball c = enclose_vectors(VectorSeq::from_real(l1, {{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_NEAR(c.center[0].real(), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(c.center[1].real(), 1.0 / 3.0, 1e-15);
    // Farthest points (1,0) and (0,1) sit at L1 distance 2/3 + 1/3.
    EXPECT_NEAR(c.radius, 1.0, 1e-15);
    const auto linf = NormedSpace::make(2, NormFamily::LInf);
    EXPECT_NEAR(enclose_vectors(VectorSeq::from_real(linf, {{0, 0}, {1, 0}, {0, 1}})).radius, 2.0 / 3.0, 1e-15);
}

TEST(EncloseVectors, MembershipByConstruction) {
    fuzz::Generator g(35);
    for (int t = 0; t < 500; ++t) {
        const auto sp = g.space(fuzz::kFamilies[t % 4]);
        const auto x = g.vectors(g.size(1, 30), sp, 4.0);
        EXPECT_EQ(first_outside(enclose_vectors(x), x), x.size());
    }
}

TEST(EncloseReal, Interval) {
    const Interval iv = enclose_real(ScalarSeq{0.2, -1.0, 3.5});
    EXPECT_EQ(iv.m, -1.0);
    EXPECT_EQ(iv.M, 3.5);
    EXPECT_THROW((void)enclose_real(ScalarSeq{Scalar(0, 1)}), Error);
}
