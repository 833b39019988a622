#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gruss/bounds.hpp"
#include "gruss/enclosure.hpp"
#include "gruss/error.hpp"
#include "gruss/sequence.hpp"
#include "gruss/space.hpp"
#include "gruss/summation.hpp"

namespace gruss {

/// |sin(omega m)| below this marks the excluded frequencies omega = l pi / m.
inline constexpr double kSingularSine = 1e-9;

namespace detail {

// exp(i * omega * k) with omega * k split exactly into hi + lo, so that large integer
// multipliers do not lose the phase to rounding of the product.
inline Scalar unit_phase(double omega, double k) {
    const double hi = omega * k;
    const double lo = std::fma(omega, k, -hi);
    return std::polar(1.0, hi) * std::polar(1.0, lo);
}

inline double sine_of_product(double omega, double k) { return unit_phase(omega, k).imag(); }

}  // namespace detail

/// Frequency omega, order m in 1..n, length n.
struct FourierParams {
    double omega = 0.0;
    std::size_t m = 1;
    std::size_t n = 1;

    [[nodiscard]] static FourierParams make(double omega, std::size_t m, std::size_t n) {
        if (!std::isfinite(omega)) throw Error(ErrorCode::InvalidParameter, "omega must be finite");
        if (n == 0) throw Error(ErrorCode::InvalidParameter, "n must be >= 1");
        if (m == 0 || m > n) {
            throw Error(ErrorCode::InvalidParameter,
                        "m = " + std::to_string(m) + " outside 1.." + std::to_string(n));
        }
        return FourierParams{omega, m, n};
    }

    [[nodiscard]] double sin_omega_m() const {
        return detail::sine_of_product(omega, static_cast<double>(m));
    }

    [[nodiscard]] bool singular() const { return std::abs(sin_omega_m()) < kSingularSine; }
};

/// exp(2 i omega m k) for k = 1..n.
[[nodiscard]] inline ScalarSeq fourier_kernel(const FourierParams& params) {
    ScalarSeq e(params.n);
    const double two_m = 2.0 * static_cast<double>(params.m);
    for (std::size_t k = 1; k <= params.n; ++k) {
        e[k - 1] = detail::unit_phase(params.omega, two_m * static_cast<double>(k));
    }
    return e;
}

/// sum_k exp(2 i omega m k) x_k by direct summation.
[[nodiscard]] inline Vec dft(const VectorSeq& x, const FourierParams& params) {
    detail::require_same_length(x.size(), params.n, "dft");
    const ScalarSeq e = fourier_kernel(params);
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t k = 0; k < x.size(); ++k) {
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += e[k] * x[k][c];
    }
    Vec out(x.dimension());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = acc[c].value();
    return out;
}

struct DirichletSum {
    Scalar value;
    bool direct_fallback = false;
};

/// sum_{k=1}^n exp(2 i omega m k) = sin(omega m n) / sin(omega m) * exp(i omega (n+1) m).
/// At singular frequencies the sum is taken directly and flagged.
[[nodiscard]] inline DirichletSum dirichlet_sum(const FourierParams& params) {
    if (params.singular()) {
        CompensatedSum<Scalar> acc;
        for (const auto& e : fourier_kernel(params)) acc += e;
        return DirichletSum{acc.value(), true};
    }
    const double m = static_cast<double>(params.m);
    const double n = static_cast<double>(params.n);
    const double ratio = detail::sine_of_product(params.omega, m * n) / params.sin_omega_m();
    return DirichletSum{ratio * detail::unit_phase(params.omega, (n + 1.0) * m), false};
}

namespace detail {

inline Vec plain_mean(const VectorSeq& x) { return weighted_mean_vector(x, WeightVector::uniform(x.size())); }

// ||T - s * mean(x)|| and R * sum_k |w_k - s / n| for a kernel w with kernel sum s.
inline BoundReport surrogate_report(const VectorSeq& x, const Vec& transform, const ScalarSeq& kernel,
                                    Scalar kernel_sum, double radius, std::string_view id) {
    const Vec mean = plain_mean(x);
    Vec diff(x.dimension());
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = transform[c] - kernel_sum * mean[c];
    const Scalar centre = kernel_sum / static_cast<double>(kernel.size());
    CompensatedSum<double> acc;
    for (const auto& w : kernel) acc += std::abs(w - centre);
    BoundReport r;
    r.gap = x.norm(diff);
    r.add(id, radius * acc.value());
    return r;
}

}  // namespace detail

/// ||F(x)(m) - D * mean(x)|| <= R sum_k |exp(2 i omega m k) - D / n| with D the closed-form kernel sum.
[[nodiscard]] inline BoundReport dft_bound(const VectorSeq& x, const FourierParams& params, const Ball& ball) {
    detail::require_same_length(x.size(), params.n, "dft_bound");
    detail::require_vectors_inside(ball, x);
    if (params.singular()) {
        throw Error(ErrorCode::SingularOmega, "omega * m is within tolerance of a multiple of pi");
    }
    const Scalar d = dirichlet_sum(params).value;
    BoundReport r = detail::surrogate_report(x, dft(x, params), fourier_kernel(params), d, ball.radius, "dft");
    r.inputs = detail::summarize(x.size(), &x) + ", omega=" + detail::describe_scalar(params.omega) +
               ", m=" + std::to_string(params.m);
    return r;
}

[[nodiscard]] inline BoundReport dft_bound(const VectorSeq& x, const FourierParams& params, const Segment& seg) {
    validate(seg);
    return dft_bound(x, params, detail::scalar_ball(x, to_ball(seg)));
}

[[nodiscard]] inline BoundReport dft_bound(const VectorSeq& x, const FourierParams& params, const Interval& iv) {
    return dft_bound(x, params, detail::interval_ball(x, iv));
}

struct MellinParams {
    std::size_t m = 1;
    std::size_t n = 1;

    [[nodiscard]] static MellinParams make(std::size_t m, std::size_t n) {
        if (m == 0 || n == 0) throw Error(ErrorCode::InvalidParameter, "Mellin transform needs m, n >= 1");
        return MellinParams{m, n};
    }
};

/// k^(m-1) for k = 1..n.
[[nodiscard]] inline ScalarSeq mellin_kernel(const MellinParams& params) {
    ScalarSeq w(params.n);
    const double e = static_cast<double>(params.m) - 1.0;
    for (std::size_t k = 1; k <= params.n; ++k) w[k - 1] = std::pow(static_cast<double>(k), e);
    return w;
}

[[nodiscard]] inline Vec mellin(const VectorSeq& x, const MellinParams& params) {
    detail::require_same_length(x.size(), params.n, "mellin");
    const ScalarSeq w = mellin_kernel(params);
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t k = 0; k < x.size(); ++k) {
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += w[k] * x[k][c];
    }
    Vec out(x.dimension());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = acc[c].value();
    return out;
}

/// S_p(n) = sum_{k=1}^n k^p.
[[nodiscard]] inline double power_sum(double p, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "power_sum needs n >= 1");
    if (p == 0.0) return static_cast<double>(n);
    CompensatedSum<double> acc;
    for (std::size_t k = 1; k <= n; ++k) acc += std::pow(static_cast<double>(k), p);
    return acc.value();
}

/// ||M(x)(m) - S_{m-1}(n) mean(x)|| <= R sum_k |k^(m-1) - S_{m-1}(n)/n|.
[[nodiscard]] inline BoundReport mellin_bound(const VectorSeq& x, const MellinParams& params, const Ball& ball) {
    detail::require_same_length(x.size(), params.n, "mellin_bound");
    detail::require_vectors_inside(ball, x);
    const double s = power_sum(static_cast<double>(params.m) - 1.0, params.n);
    BoundReport r =
        detail::surrogate_report(x, mellin(x, params), mellin_kernel(params), Scalar(s), ball.radius, "mellin");
    r.inputs = detail::summarize(x.size(), &x) + ", m=" + std::to_string(params.m);
    return r;
}

[[nodiscard]] inline BoundReport mellin_bound(const VectorSeq& x, const MellinParams& params, const Segment& seg) {
    validate(seg);
    return mellin_bound(x, params, detail::scalar_ball(x, to_ball(seg)));
}

[[nodiscard]] inline BoundReport mellin_bound(const VectorSeq& x, const MellinParams& params, const Interval& iv) {
    return mellin_bound(x, params, detail::interval_ball(x, iv));
}

/// sum_{k=1}^n |k - (n+1)/2| summed term by term.
[[nodiscard]] inline double mu_deviation_direct(std::size_t n) {
    const double c = (static_cast<double>(n) + 1.0) / 2.0;
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) acc += std::abs(static_cast<double>(k) - c);
    return acc;
}

/// floor((n+1)/2) * (n - floor((n+1)/2)).
[[nodiscard]] inline double mu_deviation_closed(std::size_t n) {
    const std::uint64_t h = (static_cast<std::uint64_t>(n) + 1) / 2;
    return static_cast<double>(h * (static_cast<std::uint64_t>(n) - h));
}

/// ||sum k x_k - (n+1)/2 sum x_k|| <= R floor((n+1)/2)(n - floor((n+1)/2)).
[[nodiscard]] inline BoundReport mu_bound(const VectorSeq& x, const Ball& ball) {
    if (x.size() == 0) throw Error(ErrorCode::EmptyInput, "mu_bound needs n >= 1");
    detail::require_vectors_inside(ball, x);
    const std::size_t n = x.size();
    const double closed = mu_deviation_closed(n);
    if (closed != mu_deviation_direct(n)) {
        throw Error(ErrorCode::Internal, "integer-part closed form disagrees with the direct sum");
    }
    std::vector<CompensatedSum<Scalar>> weighted(x.dimension()), plain(x.dimension());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < x.dimension(); ++c) {
            weighted[c] += static_cast<double>(k + 1) * x[k][c];
            plain[c] += x[k][c];
        }
    }
    const double half = (static_cast<double>(n) + 1.0) / 2.0;
    Vec diff(x.dimension());
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = weighted[c].value() - half * plain[c].value();
    BoundReport r;
    r.gap = x.norm(diff);
    r.inputs = detail::summarize(n, &x);
    r.add("mu", ball.radius * closed);
    return r;
}

[[nodiscard]] inline BoundReport mu_bound(const VectorSeq& x, const Segment& seg) {
    validate(seg);
    return mu_bound(x, detail::scalar_ball(x, to_ball(seg)));
}

[[nodiscard]] inline BoundReport mu_bound(const VectorSeq& x, const Interval& iv) {
    return mu_bound(x, detail::interval_ball(x, iv));
}

}  // namespace gruss
