#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gruss/polynomials.hpp"
#include "gruss/transforms.hpp"
#include "support/random_instances.hpp"

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

VectorSeq line(std::initializer_list<double> xs) {
    std::vector<std::vector<double>> c;
    for (double v : xs) c.push_back({v});
    return VectorSeq::from_real(NormedSpace::make(1, NormFamily::L2), c);
}

// sum_k z^k c_k with explicit powers.
Vec power_form(const VectorSeq& c, Scalar z) {
    Vec acc = zeros(c.dimension());
    for (std::size_t k = 0; k < c.size(); ++k) acc = add(acc, scaled(std::pow(z, static_cast<double>(k)), c[k]));
    return acc;
}

}  // namespace

TEST(Polynomial, Construction) {
    EXPECT_EQ(code_of([] { VectorPolynomial(line({})); }), ErrorCode::EmptyInput);
    EXPECT_EQ(code_of([] { VectorPolynomial(line({1, 0})); }), ErrorCode::ZeroLeadingCoefficient);
    EXPECT_EQ(VectorPolynomial(line({1, 2, 3})).degree(), 2u);
}

TEST(Polynomial, EvalExamples) {
    const VectorPolynomial P(line({4, -1, 2.5}));
    EXPECT_EQ(poly_eval(P, 0.0), Vec{Scalar(4)});
    EXPECT_EQ(poly_eval(P, 1.0), Vec{Scalar(5.5)});
    EXPECT_EQ(poly_eval(VectorPolynomial(line({1, 2})), 3.0), Vec{Scalar(7)});
}

TEST(Polynomial, HornerMatchesPowerForm) {
    fuzz::Generator g(71);
    for (int t = 0; t < 1000; ++t) {
        const auto sp = g.space(fuzz::kFamilies[t % 4]);
        const auto c = g.vectors(g.size(1, 20), sp);
        if (!(sp.norm(c[c.size() - 1]) > 0)) continue;
        const Scalar z = g.in_disk(0.0, 1.5);
        const Vec h = poly_eval(VectorPolynomial(c), z);
        const Vec p = power_form(c, z);
        EXPECT_LE(sp.norm(sub(h, p)), 1e-12 * (1 + sp.norm(p)) * 10);
    }
}

TEST(Polynomial, GeometricFactorNearOne) {
    for (double eps : {1e-3, 1e-7, 1e-10}) {
        const Scalar z = 1.0 + Scalar(eps, eps);
        Scalar direct = 0, zk = 1;
        for (int k = 0; k <= 6; ++k) {
            direct += zk;
            zk *= z;
        }
        EXPECT_NEAR(std::abs(geometric_factor(z, 6) - direct), 0.0, 1e-9);
    }
}

TEST(PolyBound, ConstantCoefficients) {
    const auto sp = NormedSpace::make(2, NormFamily::L2);
    const Vec c{1.0, -2.0};
    const VectorPolynomial P(VectorSeq(sp, std::vector<Vec>(4, c)));
    const auto r = poly_bound(P, Scalar(0.3, 0.9), Ball{c, 0.0, sp});
    EXPECT_NEAR(r.gap, 0.0, 1e-14);
    EXPECT_EQ(r.bound(), 0.0);
}

TEST(PolyBound, DegreeZero) {
    const auto r = poly_bound(VectorPolynomial(line({0.7})), Scalar(-2, 1), Ball{Vec{0.0}, 1.0, NormedSpace::make(1, NormFamily::L2)});
    EXPECT_NEAR(r.gap, 0.0, 1e-15);
}

TEST(PolyBound, RandomDegreeThree) {
    fuzz::Generator g(72);
    const auto sp = NormedSpace::make(2, NormFamily::L2);
    const Ball ball{zeros(2), 1.0, sp};
    const auto r = poly_bound(VectorPolynomial(g.vectors_in_ball(4, ball, sp)), Scalar(0.5, 0.5), ball);
    EXPECT_TRUE(r.holds());
}

TEST(PolyBound, ZEqualsOne) {
    const auto sp = NormedSpace::make(1, NormFamily::L2);
    EXPECT_EQ(code_of([&] { (void)poly_bound(VectorPolynomial(line({0, 1})), 1.0, Ball{Vec{0.0}, 1.0, sp}); }),
              ErrorCode::ZEqualsOne);
    EXPECT_NO_THROW((void)poly_bound(VectorPolynomial(line({0, 1})), 1.0 + 1e-9, Ball{Vec{0.0}, 1.0, sp}));
    EXPECT_EQ(code_of([&] { (void)poly_bound(VectorPolynomial(line({0, 3})), 0.5, Ball{Vec{0.0}, 1.0, sp}); }),
              ErrorCode::EnclosureViolation);
}

TEST(PolyBound, SoundOnRandomInstances) {
    fuzz::Generator g(73);
    int done = 0;
    while (done < 2000) {
        const auto sp = g.space(fuzz::kFamilies[done % 4]);
        const Ball ball{g.point(sp), g.uniform(0.01, 3), sp};
        const auto c = g.vectors_in_ball(g.size(1, 30), ball, sp);
        if (!(sp.norm(c[c.size() - 1]) > 0)) continue;
        const Scalar z = g.in_disk(0.0, 2.0);
        if (std::abs(z - 1.0) < 1e-3) continue;
        ASSERT_TRUE(poly_bound(VectorPolynomial(c), z, ball).holds());
        ++done;
    }
}

TEST(PolyBound, ScalarSpecializations) {
    fuzz::Generator g(74);
    const Segment seg{Scalar(1, 1), Scalar(-1, 2)};
    const Disk d = to_disk(seg);
    ScalarSeq c;
    for (int k = 0; k < 6; ++k) c.push_back(g.in_disk(d.center, d.radius));
    c.back() = seg.A;
    EXPECT_TRUE(poly_bound(VectorPolynomial(VectorSeq::from_scalars(c)), Scalar(-0.4, 1.1), seg).holds());
    EXPECT_TRUE(poly_bound(VectorPolynomial(line({0.1, 0.7, 1.0})), Scalar(0, 1), Interval{0, 1}).holds());
}

TEST(Roots, Examples) {
    EXPECT_EQ(roots_of_unity(1), ScalarSeq{Scalar(1)});
    const auto two = roots_of_unity(2);
    EXPECT_NEAR(std::abs(two[1] + 1.0), 0.0, 1e-15);
    const auto four = roots_of_unity(4);
    const ScalarSeq expect{1.0, Scalar(0, 1), -1.0, Scalar(0, -1)};
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(four[k] - expect[k]), 0.0, 1e-15);
    EXPECT_EQ(code_of([] { (void)roots_of_unity(0); }), ErrorCode::InvalidParameter);
}

TEST(Roots, PowerSumsVanish) {
    for (std::size_t N = 1; N <= 128; ++N) {
        const auto z = roots_of_unity(N);
        for (const auto& r : z) {
            EXPECT_NEAR(std::abs(r), 1.0, 1e-15);
            EXPECT_LE(std::abs(std::pow(r, static_cast<double>(N)) - 1.0), 1e-12);
        }
        for (std::size_t j = 1; j < N; ++j) {
            Scalar s = 0;
            for (const auto& r : z) s += std::pow(r, static_cast<double>(j));
            ASSERT_LE(std::abs(s), 1e-10) << N << " " << j;
        }
    }
}

TEST(RootsBound, DegreeOne) {
    const auto sp = NormedSpace::make(1, NormFamily::L2);
    const auto reps = roots_bound(VectorPolynomial(line({-1, 1})), Ball{Vec{0.0}, 1.0, sp});
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_NEAR(reps[0].gap, 2.0, 1e-15);
    EXPECT_EQ(reps[0].bound(), 2.0);
}

TEST(RootsBound, EqualCoefficientsVanish) {
    const auto sp = NormedSpace::make(3, NormFamily::L1, 2.0, ScalarField::Complex);
    const Vec c{Scalar(1, 2), -3.0, 0.5};
    for (std::size_t n = 1; n < 128; ++n) {
        const auto reps = roots_bound(VectorPolynomial(VectorSeq(sp, std::vector<Vec>(n + 1, c))), Ball{c, 0.0, sp});
        ASSERT_EQ(reps.size(), n);
        for (const auto& r : reps) ASSERT_LE(r.gap, 1e-10);
    }
}

TEST(RootsBound, RandomDegreeFour) {
    fuzz::Generator g(75);
    const auto sp = NormedSpace::make(2, NormFamily::L2);
    const Ball ball{zeros(2), 1.0, sp};
    const auto reps = roots_bound(VectorPolynomial(g.vectors_in_ball(5, ball, sp)), ball);
    ASSERT_EQ(reps.size(), 4u);
    for (const auto& r : reps) {
        EXPECT_EQ(r.bound(), 5.0);
        EXPECT_TRUE(r.holds());
    }
}

TEST(RootsBound, FollowsFromPolyBound) {
    fuzz::Generator g(76);
    for (int t = 0; t < 300; ++t) {
        const auto sp = g.space(fuzz::kFamilies[t % 4]);
        const Ball ball{g.point(sp), g.uniform(0.1, 2), sp};
        const auto c = g.vectors_in_ball(g.size(2, 16), ball, sp);
        if (!(sp.norm(c[c.size() - 1]) > 0)) continue;
        const VectorPolynomial P(c);
        const auto reps = roots_bound(P, ball);
        const auto z = roots_of_unity(P.degree() + 1);
        for (std::size_t k = 1; k <= P.degree(); ++k) {
            const auto pb = poly_bound(P, z[k], ball);
            EXPECT_NEAR(pb.gap, reps[k - 1].gap, 1e-10);
            EXPECT_LE(pb.bound(), reps[k - 1].bound() * (1 + 1e-9));
            EXPECT_TRUE(reps[k - 1].holds());
        }
    }
}

TEST(RootsBound, SegmentAndIntervalVariants) {
    const auto seg = roots_bound(VectorPolynomial(VectorSeq::from_scalars(ScalarSeq{0.0, Scalar(0, 2), Scalar(1, 1)})),
                                 Segment{0.0, Scalar(0, 2)});
    for (const auto& r : seg) {
        EXPECT_DOUBLE_EQ(r.bound(), 3.0);
        EXPECT_TRUE(r.holds());
    }
    const auto iv = roots_bound(VectorPolynomial(line({0.0, 4.0, 1.0, 3.0})), Interval{0, 4});
    for (const auto& r : iv) {
        EXPECT_DOUBLE_EQ(r.bound(), 8.0);
        EXPECT_TRUE(r.holds());
    }
}

// P at z = exp(2 i omega m) is the Fourier-type sum of the shifted coefficient sequence.
TEST(Polynomial, AgreesWithFourierKernel) {
    fuzz::Generator g(77);
    for (int t = 0; t < 200; ++t) {
        const auto sp = NormedSpace::make(2, NormFamily::L2, 2.0, ScalarField::Complex);
        const std::size_t n = g.size(1, 30);
        const auto c = g.vectors(n + 1, sp);
        const auto fp = FourierParams::make(g.uniform(-3, 3), g.size(1, n), n);
        const Scalar z = std::polar(1.0, 2.0 * fp.omega * static_cast<double>(fp.m));
        std::vector<Vec> tail(c.points().begin() + 1, c.points().end());
        const Vec lhs = poly_eval(VectorPolynomial(c), z);
        const Vec rhs = add(c[0], dft(VectorSeq(sp, tail), fp));
        EXPECT_LE(sp.norm(sub(lhs, rhs)), 1e-11 * (1 + sp.norm(lhs)));
    }
}
