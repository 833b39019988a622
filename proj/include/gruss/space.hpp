#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gruss/error.hpp"

namespace gruss {

using Scalar = std::complex<double>;
/// A point of a d-dimensional coordinate space. Real points carry zero imaginary parts.
using Vec = std::vector<Scalar>;

enum class NormFamily { L1, L2, LInf, LP };
enum class ScalarField { Real, Complex };

[[nodiscard]] constexpr std::string_view to_string(NormFamily f) noexcept {
    switch (f) {
        case NormFamily::L1: return "L1";
        case NormFamily::L2: return "L2";
        case NormFamily::LInf: return "LINF";
        case NormFamily::LP: return "LP";
    }
    return "?";
}

[[nodiscard]] constexpr std::string_view to_string(ScalarField f) noexcept {
    return f == ScalarField::Real ? "REAL" : "COMPLEX";
}

[[nodiscard]] inline NormFamily parse_norm_family(std::string_view s) {
    if (s == "L1" || s == "l1") return NormFamily::L1;
    if (s == "L2" || s == "l2") return NormFamily::L2;
    if (s == "LINF" || s == "linf" || s == "Linf") return NormFamily::LInf;
    if (s == "LP" || s == "lp" || s == "Lp") return NormFamily::LP;
    throw Error(ErrorCode::InvalidNorm, "unknown norm family '" + std::string(s) + "'");
}

/// Finite-dimensional coordinate space with one of the closed set of norms.
/// Complex coordinates are normed through their moduli.
class NormedSpace {
public:
    /// `exponent` is only read for LP and must lie in [1, inf].
    [[nodiscard]] static NormedSpace make(std::size_t dimension, NormFamily family,
                                          double exponent = 2.0,
                                          ScalarField field = ScalarField::Real) {
        if (dimension == 0) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
        if (family == NormFamily::LP && !(exponent >= 1.0)) {
            throw Error(ErrorCode::InvalidNorm, "LP exponent must lie in [1, inf]");
        }
        return NormedSpace(dimension, family, family == NormFamily::LP ? exponent : 0.0, field);
    }

    /// The scalar field itself, normed by the modulus.
    [[nodiscard]] static NormedSpace modulus(ScalarField field = ScalarField::Complex) {
        return make(1, NormFamily::L2, 2.0, field);
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] NormFamily family() const noexcept { return family_; }
    [[nodiscard]] double exponent() const noexcept { return exponent_; }
    [[nodiscard]] ScalarField field() const noexcept { return field_; }

    [[nodiscard]] NormedSpace with_field(ScalarField f) const {
        return NormedSpace(dimension_, family_, exponent_, f);
    }

    [[nodiscard]] double norm(std::span<const Scalar> v) const {
        if (v.size() != dimension_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "vector of dimension " + std::to_string(v.size()) + " in space of dimension " +
                            std::to_string(dimension_));
        }
        switch (family_) {
            case NormFamily::L1: return lp_norm(v, 1.0);
            case NormFamily::L2: return l2_norm(v);
            case NormFamily::LInf: return linf_norm(v);
            case NormFamily::LP:
                if (std::isinf(exponent_)) return linf_norm(v);
                if (exponent_ == 1.0) return lp_norm(v, 1.0);
                if (exponent_ == 2.0) return l2_norm(v);
                return lp_norm(v, exponent_);
        }
        return 0.0;
    }

    [[nodiscard]] std::string describe() const {
        std::string s(to_string(family_));
        if (family_ == NormFamily::LP) s += "(p=" + std::to_string(exponent_) + ")";
        return s + ", d=" + std::to_string(dimension_) + ", " + std::string(to_string(field_));
    }

    friend bool operator==(const NormedSpace&, const NormedSpace&) = default;

private:
    NormedSpace(std::size_t d, NormFamily f, double p, ScalarField k)
        : dimension_(d), family_(f), exponent_(p), field_(k) {}

    static double linf_norm(std::span<const Scalar> v) {
        double m = 0.0;
        for (const auto& c : v) m = std::max(m, std::abs(c));
        return m;
    }

    // Scaled by the largest modulus so that squares and powers neither overflow nor underflow.
    static double l2_norm(std::span<const Scalar> v) {
        const double scale = linf_norm(v);
        if (scale == 0.0 || !std::isfinite(scale)) return scale;
        double acc = 0.0;
        for (const auto& c : v) {
            const double r = std::abs(c) / scale;
            acc += r * r;
        }
        return scale * std::sqrt(acc);
    }

    static double lp_norm(std::span<const Scalar> v, double p) {
        if (p == 1.0) {
            double acc = 0.0;
            for (const auto& c : v) acc += std::abs(c);
            return acc;
        }
        const double scale = linf_norm(v);
        if (scale == 0.0 || !std::isfinite(scale)) return scale;
        double acc = 0.0;
        for (const auto& c : v) acc += std::pow(std::abs(c) / scale, p);
        return scale * std::pow(acc, 1.0 / p);
    }

    std::size_t dimension_;
    NormFamily family_;
    double exponent_;
    ScalarField field_;
};

// Componentwise arithmetic; operands must share a dimension.

[[nodiscard]] inline Vec zeros(std::size_t d) { return Vec(d, Scalar{}); }

[[nodiscard]] inline Vec add(const Vec& u, const Vec& v) {
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

[[nodiscard]] inline Vec sub(const Vec& u, const Vec& v) {
    Vec r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

[[nodiscard]] inline Vec scaled(Scalar s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

[[nodiscard]] inline bool is_real(std::span<const Scalar> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.imag() == 0.0; });
}

[[nodiscard]] inline Vec real_vec(std::span<const double> coords) {
    return Vec(coords.begin(), coords.end());
}

}  // namespace gruss
