#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gruss/bounds.hpp"
#include "gruss/enclosure.hpp"
#include "gruss/error.hpp"
#include "gruss/sequence.hpp"
#include "gruss/space.hpp"
#include "gruss/summation.hpp"

namespace gruss {

/// P(z) = c_0 + z c_1 + ... + z^n c_n with vector coefficients and c_n != 0.
class VectorPolynomial {
public:
    explicit VectorPolynomial(VectorSeq coefficients) : c_(std::move(coefficients)) {
        if (c_.size() == 0) throw Error(ErrorCode::EmptyInput, "polynomial needs at least one coefficient");
        if (!(c_.norm(c_[c_.size() - 1]) > 0.0)) {
            throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient c_n must be nonzero");
        }
    }

    [[nodiscard]] std::size_t degree() const noexcept { return c_.size() - 1; }
    [[nodiscard]] const VectorSeq& coefficients() const noexcept { return c_; }

private:
    VectorSeq c_;
};

/// Horner evaluation; coordinates of the result are complex.
[[nodiscard]] inline Vec poly_eval(const VectorPolynomial& P, Scalar z) {
    const VectorSeq& c = P.coefficients();
    Vec acc = c[c.size() - 1];
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = acc[j] * z + c[k][j];
    }
    return acc;
}

/// Threshold on |z - 1| below which the geometric factor is summed term by term.
inline constexpr double kGeometricDirectRadius = 1e-6;
/// |z - 1| at or below this is treated as z = 1.
inline constexpr double kZEqualsOne = 1e-12;

/// (z^(n+1) - 1) / (z - 1) = 1 + z + ... + z^n.
[[nodiscard]] inline Scalar geometric_factor(Scalar z, std::size_t n) {
    if (std::abs(z - 1.0) < kGeometricDirectRadius) {
        CompensatedSum<Scalar> acc;
        Scalar zk(1.0);
        for (std::size_t k = 0; k <= n; ++k) {
            acc += zk;
            zk *= z;
        }
        return acc.value();
    }
    Scalar zn1(1.0);
    for (std::size_t k = 0; k <= n; ++k) zn1 *= z;
    return (zn1 - 1.0) / (z - 1.0);
}

/// ||P(z) - G(z)/(n+1) sum c_k|| <= R sum_k |z^k - G(z)/(n+1)|, G the geometric factor.
[[nodiscard]] inline BoundReport poly_bound(const VectorPolynomial& P, Scalar z, const Ball& ball) {
    const VectorSeq& c = P.coefficients();
    detail::require_vectors_inside(ball, c);
    if (std::abs(z - 1.0) <= kZEqualsOne) throw Error(ErrorCode::ZEqualsOne, "the bound excludes z = 1");
    const std::size_t n = P.degree();
    const Scalar g = geometric_factor(z, n);
    const Scalar centre = g / static_cast<double>(n + 1);

    std::vector<CompensatedSum<Scalar>> sum(c.dimension());
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t j = 0; j < c.dimension(); ++j) sum[j] += c[k][j];
    }
    const Vec pz = poly_eval(P, z);
    Vec diff(c.dimension());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = pz[j] - centre * sum[j].value();

    CompensatedSum<double> dev;
    Scalar zk(1.0);
    for (std::size_t k = 0; k <= n; ++k) {
        dev += std::abs(zk - centre);
        zk *= z;
    }
    BoundReport r;
    r.gap = c.norm(diff);
    r.inputs = "degree=" + std::to_string(n) + ", " + c.space().describe() + ", z=" + detail::describe_scalar(z);
    r.add("poly", ball.radius * dev.value());
    return r;
}

[[nodiscard]] inline BoundReport poly_bound(const VectorPolynomial& P, Scalar z, const Segment& seg) {
    validate(seg);
    return poly_bound(P, z, detail::scalar_ball(P.coefficients(), to_ball(seg)));
}

[[nodiscard]] inline BoundReport poly_bound(const VectorPolynomial& P, Scalar z, const Interval& iv) {
    return poly_bound(P, z, detail::interval_ball(P.coefficients(), iv));
}

/// z_k = exp(2 pi i k / N) for k = 0..N-1, so that z_k^N = 1.
[[nodiscard]] inline ScalarSeq roots_of_unity(std::size_t count) {
    if (count == 0) throw Error(ErrorCode::InvalidParameter, "need at least one root");
    ScalarSeq z(count);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(count);
    for (std::size_t k = 0; k < count; ++k) z[k] = std::polar(1.0, step * static_cast<double>(k));
    return z;
}

/// ||P(z_k)|| <= (n+1) R at every nontrivial (n+1)-th root of unity, in root order.
[[nodiscard]] inline std::vector<BoundReport> roots_bound(const VectorPolynomial& P, const Ball& ball) {
    const VectorSeq& c = P.coefficients();
    detail::require_vectors_inside(ball, c);
    const std::size_t n = P.degree();
    const ScalarSeq roots = roots_of_unity(n + 1);
    std::vector<BoundReport> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BoundReport r;
        r.gap = c.norm(poly_eval(P, roots[k]));
        r.inputs = "degree=" + std::to_string(n) + ", root k=" + std::to_string(k);
        r.add("roots", static_cast<double>(n + 1) * ball.radius);
        out.push_back(std::move(r));
    }
    return out;
}

/// Complex coefficients in the disk of (w, W): bound |W-w|/2 (n+1).
[[nodiscard]] inline std::vector<BoundReport> roots_bound(const VectorPolynomial& P, const Segment& seg) {
    validate(seg);
    return roots_bound(P, detail::scalar_ball(P.coefficients(), to_ball(seg)));
}

/// Real coefficients in [a, A]: bound (A-a)/2 (n+1).
[[nodiscard]] inline std::vector<BoundReport> roots_bound(const VectorPolynomial& P, const Interval& iv) {
    return roots_bound(P, detail::interval_ball(P.coefficients(), iv));
}

}  // namespace gruss
