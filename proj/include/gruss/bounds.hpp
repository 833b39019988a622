#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gruss/enclosure.hpp"
#include "gruss/error.hpp"
#include "gruss/sequence.hpp"
#include "gruss/space.hpp"
#include "gruss/summation.hpp"

namespace gruss {

/// Slack used when checking gap <= bound: gap <= bound * (1 + rel) + abs.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;
};

[[nodiscard]] inline bool holds(double gap, double bound, Tolerance tol = {}) {
    return gap <= bound * (1.0 + tol.rel) + tol.abs;
}

/// gap / bound; zero when both vanish (gap within the absolute slack of a zero bound).
[[nodiscard]] inline double ratio_of(double gap, double bound, double abs_slack = Tolerance{}.abs) {
    if (bound > 0.0) return gap / bound;
    return gap <= abs_slack ? 0.0 : std::numeric_limits<double>::infinity();
}

namespace bound_id {
inline constexpr std::string_view kScalarDisk = "scalar_disk";
inline constexpr std::string_view kSegment = "segment";
inline constexpr std::string_view kInterval = "interval";
inline constexpr std::string_view kVectorBall = "vector_ball";
inline constexpr std::string_view kVectorBallCbs = "vector_ball_cbs";
inline constexpr std::string_view kVariance = "variance";
inline constexpr std::string_view kPseudoVariance = "pseudo_variance";
inline constexpr std::string_view kClassicalMaxMax = "classical_maxmax";
inline constexpr std::string_view kClassicalSumSum = "classical_sumsum";
inline constexpr std::string_view kClassicalHolder = "classical_holder";
inline constexpr std::string_view kUniformMaxMax = "uniform_maxmax";
inline constexpr std::string_view kUniformSumSum = "uniform_sumsum";
inline constexpr std::string_view kUniformHolder = "uniform_holder";
}  // namespace bound_id

struct BoundEntry {
    std::string id;
    double bound = 0.0;
    double ratio = 0.0;
};

/// A gap together with every bound evaluated against it.
struct BoundReport {
    double gap = 0.0;
    std::vector<BoundEntry> entries;
    std::string inputs;

    void add(std::string_view id, double bound) {
        entries.push_back(BoundEntry{std::string(id), bound, ratio_of(gap, bound)});
    }

    [[nodiscard]] const BoundEntry& entry(std::string_view id) const {
        for (const auto& e : entries) {
            if (e.id == id) return e;
        }
        throw Error(ErrorCode::UnknownBoundId, "report has no entry '" + std::string(id) + "'");
    }

    [[nodiscard]] double bound(std::string_view id) const { return entry(id).bound; }
    [[nodiscard]] double ratio(std::string_view id) const { return entry(id).ratio; }

    /// Single-entry reports.
    [[nodiscard]] double bound() const { return entries.at(0).bound; }
    [[nodiscard]] double ratio() const { return entries.at(0).ratio; }

    [[nodiscard]] bool holds(Tolerance tol = {}) const {
        for (const auto& e : entries) {
            if (!gruss::holds(gap, e.bound, tol)) return false;
        }
        return true;
    }
};

/// Conjugate exponents p, q > 1 with 1/p + 1/q = 1.
class HolderPair {
public:
    [[nodiscard]] static HolderPair make(double p, double q) {
        if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q) ||
            std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
            throw Error(ErrorCode::InvalidHolder, "need p, q > 1 with 1/p + 1/q = 1");
        }
        return HolderPair(p, q);
    }

    [[nodiscard]] static HolderPair conjugate(double p) {
        if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidHolder, "need finite p > 1");
        return make(p, p / (p - 1.0));
    }

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double q() const noexcept { return q_; }

private:
    HolderPair(double p, double q) : p_(p), q_(q) {}
    double p_;
    double q_;
};

namespace detail {

inline std::string describe_scalar(Scalar z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

inline std::string summarize(std::size_t n, const VectorSeq* x) {
    std::string s = "n=" + std::to_string(n);
    if (x != nullptr) s += ", " + x->space().describe();
    return s;
}

template <typename Region>
void require_scalars_inside(const Region& region, const ScalarSeq& alpha, const char* name, const char* what) {
    const std::size_t bad = first_outside(region, alpha);
    if (bad != alpha.size()) {
        throw Error(ErrorCode::EnclosureViolation, std::string(name) + "_" + std::to_string(bad + 1) + " = " +
                                                       describe_scalar(alpha[bad]) + " lies outside the " + what);
    }
}

inline void require_vectors_inside(const Ball& ball, const VectorSeq& x) {
    validate(ball);
    if (ball.space.dimension() != x.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "ball and sequence dimensions differ");
    }
    const Ball in_x_space{ball.center, ball.radius, x.space()};
    const std::size_t bad = first_outside(in_x_space, x);
    if (bad != x.size()) {
        throw Error(ErrorCode::EnclosureViolation,
                    "x_" + std::to_string(bad + 1) + " lies outside the ball (distance " +
                        std::to_string(x.norm(sub(x[bad], ball.center))) + " > radius " +
                        std::to_string(ball.radius) + ")");
    }
}

inline Ball scalar_ball(const VectorSeq& x, const Ball& b) {
    if (x.dimension() != 1) {
        throw Error(ErrorCode::DimensionMismatch, "segment and interval enclosures apply to scalar (d = 1) data");
    }
    return b;
}

inline Ball interval_ball(const VectorSeq& x, const Interval& iv) {
    validate(iv);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!is_real(x[i])) throw Error(ErrorCode::NotReal, "interval enclosure needs real data");
    }
    return scalar_ball(x, to_ball(iv));
}

inline void require_lengths(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p) {
    require_same_length(alpha.size(), x.size(), "bound");
    require_same_length(alpha.size(), p.size(), "bound");
}

}  // namespace detail

/// Sum_i p_i ||x_i - sum_j p_j x_j||.
[[nodiscard]] inline double mean_deviation(const VectorSeq& x, const WeightVector& p) {
    const Vec xbar = weighted_mean_vector(x, p);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += p[i] * x.norm(sub(x[i], xbar));
    return acc.value();
}

/// Sum_i p_i |alpha_i - sum_j p_j alpha_j|.
[[nodiscard]] inline double mean_deviation(const ScalarSeq& alpha, const WeightVector& p) {
    const Scalar abar = weighted_mean(alpha, p);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += p[i] * std::abs(alpha[i] - abar);
    return acc.value();
}

/// sum p_i |alpha_i|^2 - |sum p_i alpha_i|^2, evaluated in the centered form
/// sum p_i |alpha_i - abar|^2 so it is never negative.
[[nodiscard]] inline double variance(const ScalarSeq& alpha, const WeightVector& p) {
    const Scalar abar = weighted_mean(alpha, p);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += p[i] * std::norm(alpha[i] - abar);
    return std::max(acc.value(), 0.0);
}

/// |sum p_i alpha_i^2 - (sum p_i alpha_i)^2|, no conjugation; centered form as in variance().
[[nodiscard]] inline double pseudo_variance(const ScalarSeq& alpha, const WeightVector& p) {
    const Scalar abar = weighted_mean(alpha, p);
    CompensatedSum<Scalar> acc;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Scalar c = alpha[i] - abar;
        acc += p[i] * c * c;
    }
    return std::abs(acc.value());
}

namespace detail {

// Shared by the disk, segment and interval bounds so the three agree bit for bit.
inline BoundReport disk_bound(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p, const Disk& disk,
                              std::string_view id) {
    BoundReport r;
    r.gap = gruss_gap_direct(alpha, x, p).gap;
    r.inputs = summarize(alpha.size(), &x) + ", disk center " + describe_scalar(disk.center) + " radius " +
               describe_scalar(disk.radius);
    r.add(id, disk.radius * mean_deviation(x, p));
    return r;
}

}  // namespace detail

/// alpha_i in the disk D(center, R): gap <= R sum p_i ||x_i - xbar||.
[[nodiscard]] inline BoundReport bound_scalar_disk(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p,
                                                   const Disk& disk) {
    detail::require_lengths(alpha, x, p);
    validate(disk);
    detail::require_scalars_inside(disk, alpha, "alpha", "disk");
    return detail::disk_bound(alpha, x, p, disk, bound_id::kScalarDisk);
}

/// Re[(A - alpha_i)(conj alpha_i - conj a)] >= 0: gap <= |A-a|/2 sum p_i ||x_i - xbar||.
[[nodiscard]] inline BoundReport bound_complex_segment(const ScalarSeq& alpha, const VectorSeq& x,
                                                       const WeightVector& p, const Segment& seg) {
    detail::require_lengths(alpha, x, p);
    validate(seg);
    detail::require_scalars_inside(seg, alpha, "alpha", "segment disk");
    return detail::disk_bound(alpha, x, p, to_disk(seg), bound_id::kSegment);
}

/// Real alpha_i in [m, M]: gap <= (M-m)/2 sum p_i ||x_i - xbar||.
[[nodiscard]] inline BoundReport bound_real_interval(const ScalarSeq& alpha, const VectorSeq& x,
                                                     const WeightVector& p, const Interval& iv) {
    detail::require_lengths(alpha, x, p);
    validate(iv);
    if (!is_real(alpha)) throw Error(ErrorCode::NotReal, "interval bound needs real alpha");
    detail::require_scalars_inside(iv, alpha, "alpha", "interval");
    return detail::disk_bound(alpha, x, p, to_disk(to_segment(iv)), bound_id::kInterval);
}

/// x_i in the ball B(center, R): gap <= R sum p_i |alpha_i - abar|.
[[nodiscard]] inline BoundReport bound_vector_ball(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p,
                                                   const Ball& ball) {
    detail::require_lengths(alpha, x, p);
    detail::require_vectors_inside(ball, x);
    BoundReport r;
    r.gap = gruss_gap_direct(alpha, x, p).gap;
    r.inputs = detail::summarize(alpha.size(), &x) + ", ball radius " + detail::describe_scalar(ball.radius);
    r.add(bound_id::kVectorBall, ball.radius * mean_deviation(alpha, p));
    return r;
}

/// Coarser form R sqrt(variance); the report also carries the vector_ball value.
[[nodiscard]] inline BoundReport bound_vector_ball_cbs(const ScalarSeq& alpha, const VectorSeq& x,
                                                       const WeightVector& p, const Ball& ball) {
    BoundReport r = bound_vector_ball(alpha, x, p, ball);
    r.entries.insert(r.entries.begin(), BoundEntry{std::string(bound_id::kVectorBallCbs), 0.0, 0.0});
    r.entries.front().bound = ball.radius * std::sqrt(variance(alpha, p));
    r.entries.front().ratio = ratio_of(r.gap, r.entries.front().bound);
    return r;
}

/// Gap slot holds the variance; bound |A-a|^2/4.
[[nodiscard]] inline BoundReport variance_bound(const ScalarSeq& alpha, const WeightVector& p, const Segment& seg) {
    detail::require_same_length(alpha.size(), p.size(), "variance_bound");
    validate(seg);
    detail::require_scalars_inside(seg, alpha, "alpha", "segment disk");
    BoundReport r;
    r.gap = variance(alpha, p);
    r.inputs = detail::summarize(alpha.size(), nullptr);
    r.add(bound_id::kVariance, 0.25 * std::norm(seg.A - seg.a));
    return r;
}

[[nodiscard]] inline BoundReport pseudo_variance_bound(const ScalarSeq& alpha, const WeightVector& p,
                                                       const Segment& seg) {
    detail::require_same_length(alpha.size(), p.size(), "pseudo_variance_bound");
    validate(seg);
    detail::require_scalars_inside(seg, alpha, "alpha", "segment disk");
    BoundReport r;
    r.gap = pseudo_variance(alpha, p);
    r.inputs = detail::summarize(alpha.size(), nullptr);
    r.add(bound_id::kPseudoVariance, 0.25 * std::norm(seg.A - seg.a));
    return r;
}

/// t0 <= t1 <= t2 <= t3 for two complex sequences with segment enclosures.
struct GrussChain {
    std::array<double, 4> terms{};

    [[nodiscard]] bool monotone(Tolerance tol = {}) const {
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
            if (!holds(terms[k], terms[k + 1], tol)) return false;
        }
        return true;
    }
};

[[nodiscard]] inline GrussChain gruss_chain(const ScalarSeq& alpha, const ScalarSeq& beta, const WeightVector& p,
                                            const Segment& seg_alpha, const Segment& seg_beta) {
    detail::require_same_length(alpha.size(), beta.size(), "gruss_chain");
    detail::require_same_length(alpha.size(), p.size(), "gruss_chain");
    validate(seg_alpha);
    validate(seg_beta);
    detail::require_scalars_inside(seg_alpha, alpha, "alpha", "segment disk");
    detail::require_scalars_inside(seg_beta, beta, "beta", "segment disk");
    const double half_a = 0.5 * std::abs(seg_alpha.A - seg_alpha.a);
    GrussChain c;
    const VectorSeq beta_points(NormedSpace::modulus(ScalarField::Complex),
                                VectorSeq::from_scalars(beta).points());
    c.terms[0] = gruss_gap_direct(alpha, beta_points, p).gap;
    c.terms[1] = half_a * mean_deviation(beta, p);
    c.terms[2] = half_a * std::sqrt(variance(beta, p));
    c.terms[3] = half_a * 0.5 * std::abs(seg_beta.A - seg_beta.a);
    return c;
}

namespace detail {

// sum_i p_i (i - ibar)^2 over 1-based indices; equals sum i^2 p_i - (sum i p_i)^2.
inline double index_variance(const WeightVector& p) {
    CompensatedSum<double> m;
    for (std::size_t i = 0; i < p.size(); ++i) m += p[i] * static_cast<double>(i + 1);
    const double ibar = m.value();
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = static_cast<double>(i + 1) - ibar;
        acc += p[i] * d * d;
    }
    return acc.value();
}

// sum_{1 <= j < i <= n} p_i p_j (i - j), in one pass with prefix sums.
inline double index_pair_dispersion(const WeightVector& p) {
    double prefix_w = 0.0;
    double prefix_jw = 0.0;
    CompensatedSum<double> acc;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double i = static_cast<double>(k + 1);
        acc += p[k] * (i * prefix_w - prefix_jw);
        prefix_w += p[k];
        prefix_jw += i * p[k];
    }
    return acc.value();
}

struct DifferenceNorms {
    double max_alpha = 0.0;
    double max_x = 0.0;
    double sum_alpha = 0.0;
    double sum_x = 0.0;
    double lp_alpha = 0.0;
    double lq_x = 0.0;
};

inline DifferenceNorms difference_norms(const ScalarSeq& alpha, const VectorSeq& x, const HolderPair& h) {
    const ScalarSeq da = forward_differences(alpha);
    const std::vector<Vec> dx = forward_differences(x);
    DifferenceNorms out;
    CompensatedSum<double> sa, sx, pa, qx;
    for (const auto& d : da) {
        const double v = std::abs(d);
        out.max_alpha = std::max(out.max_alpha, v);
        sa += v;
        pa += std::pow(v, h.p());
    }
    for (const auto& d : dx) {
        const double v = x.norm(d);
        out.max_x = std::max(out.max_x, v);
        sx += v;
        qx += std::pow(v, h.q());
    }
    out.sum_alpha = sa.value();
    out.sum_x = sx.value();
    out.lp_alpha = std::pow(pa.value(), 1.0 / h.p());
    out.lq_x = std::pow(qx.value(), 1.0 / h.q());
    return out;
}

}  // namespace detail

/// The three forward-difference bounds for weighted means (max-max, sum-sum, Hoelder).
[[nodiscard]] inline BoundReport classical_bounds(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p,
                                                  const HolderPair& holder) {
    detail::require_lengths(alpha, x, p);
    if (alpha.size() < 2) throw Error(ErrorCode::TooShort, "classical bounds need n >= 2");
    const auto dn = detail::difference_norms(alpha, x, holder);
    CompensatedSum<double> spread;
    for (double w : p.values()) spread += w * (1.0 - w);

    BoundReport r;
    r.gap = gruss_gap_direct(alpha, x, p).gap;
    r.inputs = detail::summarize(alpha.size(), &x) + ", holder p=" + std::to_string(holder.p());
    r.add(bound_id::kClassicalMaxMax, detail::index_variance(p) * dn.max_alpha * dn.max_x);
    r.add(bound_id::kClassicalSumSum, 0.5 * spread.value() * dn.sum_alpha * dn.sum_x);
    r.add(bound_id::kClassicalHolder, detail::index_pair_dispersion(p) * dn.lp_alpha * dn.lq_x);
    return r;
}

/// Unweighted specialization with constants (n^2-1)/12, (1-1/n)/2, (n^2-1)/(6n).
[[nodiscard]] inline BoundReport classical_bounds_uniform(const ScalarSeq& alpha, const VectorSeq& x,
                                                          const HolderPair& holder) {
    detail::require_same_length(alpha.size(), x.size(), "bound");
    if (alpha.size() < 2) throw Error(ErrorCode::TooShort, "classical bounds need n >= 2");
    const auto p = WeightVector::uniform(alpha.size());
    const auto dn = detail::difference_norms(alpha, x, holder);
    const double n = static_cast<double>(alpha.size());

    BoundReport r;
    r.gap = gruss_gap_direct(alpha, x, p).gap;
    r.inputs = detail::summarize(alpha.size(), &x) + ", uniform weights, holder p=" + std::to_string(holder.p());
    r.add(bound_id::kUniformMaxMax, (n * n - 1.0) / 12.0 * dn.max_alpha * dn.max_x);
    r.add(bound_id::kUniformSumSum, 0.5 * (1.0 - 1.0 / n) * dn.sum_alpha * dn.sum_x);
    r.add(bound_id::kUniformHolder, (n * n - 1.0) / (6.0 * n) * dn.lp_alpha * dn.lq_x);
    return r;
}

}  // namespace gruss
