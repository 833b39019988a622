#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gruss/error.hpp"
#include "gruss/space.hpp"
#include "gruss/summation.hpp"

namespace gruss {

/// Absolute tolerance on |sum(p) - 1| accepted for a probability weight vector.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Nonnegative weights summing to one. Only constructible through validation.
class WeightVector {
public:
    /// Checks (or, with `normalize`, rescales) raw weights into a probability vector.
    [[nodiscard]] static WeightVector validate(std::span<const double> raw, bool normalize = false) {
        if (raw.empty()) throw Error(ErrorCode::EmptyInput, "weight vector is empty");
        CompensatedSum<double> sum;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (!std::isfinite(raw[i])) {
                throw Error(ErrorCode::NonFinite, "weight " + std::to_string(i + 1) + " is not finite");
            }
            if (raw[i] < 0.0) {
                throw Error(ErrorCode::NegativeWeight,
                            "weight " + std::to_string(i + 1) + " = " + std::to_string(raw[i]));
            }
            sum += raw[i];
        }
        const double total = sum.value();
        std::vector<double> w(raw.begin(), raw.end());
        if (normalize) {
            if (!(total > 0.0)) throw Error(ErrorCode::ZeroSum, "weights sum to zero");
            for (auto& v : w) v /= total;
        } else if (std::abs(total - 1.0) > kWeightSumTolerance) {
            throw Error(ErrorCode::SumNotOne, "weights sum to " + std::to_string(total));
        }
        return WeightVector(std::move(w));
    }

    [[nodiscard]] static WeightVector uniform(std::size_t n) {
        if (n == 0) throw Error(ErrorCode::EmptyInput, "uniform weights need n >= 1");
        return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return w_[i]; }
    [[nodiscard]] std::span<const double> values() const noexcept { return w_; }

    [[nodiscard]] bool is_uniform() const noexcept {
        for (double v : w_) {
            if (v != w_.front()) return false;
        }
        return true;
    }

private:
    explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {}
    std::vector<double> w_;
};

[[nodiscard]] inline WeightVector validate_weights(std::span<const double> raw, bool normalize = false) {
    return WeightVector::validate(raw, normalize);
}

/// Scalars alpha_i (complex; real data has zero imaginary parts).
using ScalarSeq = std::vector<Scalar>;

[[nodiscard]] inline ScalarSeq real_scalars(std::span<const double> values) {
    return ScalarSeq(values.begin(), values.end());
}

[[nodiscard]] inline bool is_real(const ScalarSeq& s) noexcept {
    return is_real(std::span<const Scalar>(s));
}

/// Points x_1..x_n of one normed space.
class VectorSeq {
public:
    VectorSeq(NormedSpace space, std::vector<Vec> points) : space_(space), points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].size() != space_.dimension()) {
                throw Error(ErrorCode::DimensionMismatch,
                            "point " + std::to_string(i + 1) + " has dimension " +
                                std::to_string(points_[i].size()) + ", expected " +
                                std::to_string(space_.dimension()));
            }
            if (space_.field() == ScalarField::Real && !is_real(points_[i])) {
                throw Error(ErrorCode::FieldMismatch,
                            "point " + std::to_string(i + 1) + " has complex coordinates in a real space");
            }
        }
    }

    /// Real points from plain coordinate arrays.
    [[nodiscard]] static VectorSeq from_real(NormedSpace space, const std::vector<std::vector<double>>& coords) {
        std::vector<Vec> pts;
        pts.reserve(coords.size());
        for (const auto& c : coords) pts.push_back(real_vec(c));
        return VectorSeq(space, std::move(pts));
    }

    /// A scalar sequence viewed as one-dimensional points under the modulus norm.
    [[nodiscard]] static VectorSeq from_scalars(const ScalarSeq& s) {
        const auto field = is_real(s) ? ScalarField::Real : ScalarField::Complex;
        std::vector<Vec> pts;
        pts.reserve(s.size());
        for (const auto& v : s) pts.push_back(Vec{v});
        return VectorSeq(NormedSpace::modulus(field), std::move(pts));
    }

    [[nodiscard]] const NormedSpace& space() const noexcept { return space_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return space_.dimension(); }
    [[nodiscard]] const Vec& operator[](std::size_t i) const noexcept { return points_[i]; }
    [[nodiscard]] const std::vector<Vec>& points() const noexcept { return points_; }
    [[nodiscard]] double norm(const Vec& v) const { return space_.norm(v); }

private:
    NormedSpace space_;
    std::vector<Vec> points_;
};

/// Chebyshev-functional vector and its norm.
struct GapValue {
    double gap = 0.0;
    Vec gap_vector;
};

namespace detail {

inline void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorCode::LengthMismatch,
                    std::string(what) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
    }
}

inline void require_field(const ScalarSeq& alpha, const VectorSeq& x) {
    if (x.space().field() == ScalarField::Real && !is_real(alpha)) {
        throw Error(ErrorCode::FieldMismatch, "complex scalars acting on a real space");
    }
}

inline void require_dimension(const Vec& v, const VectorSeq& x) {
    if (v.size() != x.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "center has dimension " + std::to_string(v.size()) +
                                                      ", space has " + std::to_string(x.dimension()));
    }
}

inline GapValue make_gap(const VectorSeq& x, Vec v) {
    const double g = x.norm(v);
    return GapValue{g, std::move(v)};
}

}  // namespace detail

/// Sum_i p_i x_i, componentwise with compensated accumulation.
[[nodiscard]] inline Vec weighted_mean_vector(const VectorSeq& x, const WeightVector& p) {
    detail::require_same_length(x.size(), p.size(), "weighted_mean_vector");
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += p[i] * x[i][c];
    }
    Vec out(x.dimension());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = acc[c].value();
    return out;
}

[[nodiscard]] inline Scalar weighted_mean(const ScalarSeq& alpha, const WeightVector& p) {
    detail::require_same_length(alpha.size(), p.size(), "weighted_mean");
    CompensatedSum<Scalar> acc;
    for (std::size_t i = 0; i < alpha.size(); ++i) acc += p[i] * alpha[i];
    return acc.value();
}

/// ||sum p_i alpha_i x_i - (sum p_i alpha_i)(sum p_i x_i)||, evaluated as written.
[[nodiscard]] inline GapValue gruss_gap_direct(const ScalarSeq& alpha, const VectorSeq& x, const WeightVector& p) {
    detail::require_same_length(alpha.size(), x.size(), "gruss_gap");
    detail::require_same_length(alpha.size(), p.size(), "gruss_gap");
    detail::require_field(alpha, x);
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Scalar w = p[i] * alpha[i];
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += w * x[i][c];
    }
    const Scalar abar = weighted_mean(alpha, p);
    const Vec xbar = weighted_mean_vector(x, p);
    Vec v(x.dimension());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = acc[c].value() - abar * xbar[c];
    return detail::make_gap(x, std::move(v));
}

/// Same functional as sum p_i (alpha_i - center)(x_i - xbar); any center gives the same vector.
[[nodiscard]] inline GapValue gruss_gap_via_alpha_centering(const ScalarSeq& alpha, const VectorSeq& x,
                                                            const WeightVector& p, Scalar alpha_center) {
    detail::require_same_length(alpha.size(), x.size(), "gruss_gap");
    detail::require_same_length(alpha.size(), p.size(), "gruss_gap");
    detail::require_field(alpha, x);
    const Vec xbar = weighted_mean_vector(x, p);
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Scalar w = p[i] * (alpha[i] - alpha_center);
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += w * (x[i][c] - xbar[c]);
    }
    Vec v(x.dimension());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = acc[c].value();
    return detail::make_gap(x, std::move(v));
}

/// Same functional as sum p_i (alpha_i - abar)(x_i - center).
[[nodiscard]] inline GapValue gruss_gap_via_x_centering(const ScalarSeq& alpha, const VectorSeq& x,
                                                        const WeightVector& p, const Vec& x_center) {
    detail::require_same_length(alpha.size(), x.size(), "gruss_gap");
    detail::require_same_length(alpha.size(), p.size(), "gruss_gap");
    detail::require_field(alpha, x);
    detail::require_dimension(x_center, x);
    const Scalar abar = weighted_mean(alpha, p);
    std::vector<CompensatedSum<Scalar>> acc(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Scalar w = p[i] * (alpha[i] - abar);
        for (std::size_t c = 0; c < x.dimension(); ++c) acc[c] += w * (x[i][c] - x_center[c]);
    }
    Vec v(x.dimension());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] = acc[c].value();
    return detail::make_gap(x, std::move(v));
}

/// (s_2 - s_1, ..., s_n - s_{n-1}).
[[nodiscard]] inline ScalarSeq forward_differences(const ScalarSeq& s) {
    if (s.size() < 2) throw Error(ErrorCode::TooShort, "forward differences need n >= 2");
    ScalarSeq d(s.size() - 1);
    for (std::size_t j = 0; j + 1 < s.size(); ++j) d[j] = s[j + 1] - s[j];
    return d;
}

[[nodiscard]] inline std::vector<Vec> forward_differences(const VectorSeq& x) {
    if (x.size() < 2) throw Error(ErrorCode::TooShort, "forward differences need n >= 2");
    std::vector<Vec> d;
    d.reserve(x.size() - 1);
    for (std::size_t j = 0; j + 1 < x.size(); ++j) d.push_back(sub(x[j + 1], x[j]));
    return d;
}

}  // namespace gruss
