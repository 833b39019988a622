#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gruss/bounds.hpp"
#include "gruss/enclosure.hpp"
#include "gruss/error.hpp"
#include "gruss/sequence.hpp"
#include "gruss/space.hpp"

namespace gruss {

/// Inequalities whose constants are probed for sharpness.
enum class SharpBound {
    ScalarDisk,
    Segment,
    Interval,
    VectorBall,
    Variance,
    PseudoVariance,
    ClassicalMaxMax,
    ClassicalSumSum,
    ClassicalHolder,
    UniformMaxMax,
    UniformSumSum,
    UniformHolder,
};

inline constexpr std::array<SharpBound, 12> kAllSharpBounds = {
    SharpBound::ScalarDisk,      SharpBound::Segment,         SharpBound::Interval,
    SharpBound::VectorBall,      SharpBound::Variance,        SharpBound::PseudoVariance,
    SharpBound::ClassicalMaxMax, SharpBound::ClassicalSumSum, SharpBound::ClassicalHolder,
    SharpBound::UniformMaxMax,   SharpBound::UniformSumSum,   SharpBound::UniformHolder,
};

inline constexpr std::array<SharpBound, 6> kWitnessedBounds = {
    SharpBound::ScalarDisk, SharpBound::Segment,  SharpBound::Interval,
    SharpBound::VectorBall, SharpBound::Variance, SharpBound::PseudoVariance,
};

[[nodiscard]] constexpr std::string_view to_string(SharpBound b) noexcept {
    switch (b) {
        case SharpBound::ScalarDisk: return bound_id::kScalarDisk;
        case SharpBound::Segment: return bound_id::kSegment;
        case SharpBound::Interval: return bound_id::kInterval;
        case SharpBound::VectorBall: return bound_id::kVectorBall;
        case SharpBound::Variance: return bound_id::kVariance;
        case SharpBound::PseudoVariance: return bound_id::kPseudoVariance;
        case SharpBound::ClassicalMaxMax: return bound_id::kClassicalMaxMax;
        case SharpBound::ClassicalSumSum: return bound_id::kClassicalSumSum;
        case SharpBound::ClassicalHolder: return bound_id::kClassicalHolder;
        case SharpBound::UniformMaxMax: return bound_id::kUniformMaxMax;
        case SharpBound::UniformSumSum: return bound_id::kUniformSumSum;
        case SharpBound::UniformHolder: return bound_id::kUniformHolder;
    }
    return "?";
}

[[nodiscard]] inline SharpBound parse_sharp_bound(std::string_view s) {
    for (SharpBound b : kAllSharpBounds) {
        if (to_string(b) == s) return b;
    }
    throw Error(ErrorCode::UnknownBoundId, "unknown bound '" + std::string(s) + "'");
}

/// Constant multiplying the bound as stated (1, 1/2, 1/4, 1/12, 1/6).
[[nodiscard]] constexpr double claimed_constant(SharpBound b) noexcept {
    switch (b) {
        case SharpBound::ScalarDisk: return 1.0;
        case SharpBound::Segment: return 0.5;
        case SharpBound::Interval: return 0.5;
        case SharpBound::VectorBall: return 1.0;
        case SharpBound::Variance: return 0.25;
        case SharpBound::PseudoVariance: return 0.25;
        case SharpBound::ClassicalMaxMax: return 1.0;
        case SharpBound::ClassicalSumSum: return 0.5;
        case SharpBound::ClassicalHolder: return 1.0;
        case SharpBound::UniformMaxMax: return 1.0 / 12.0;
        case SharpBound::UniformSumSum: return 0.5;
        case SharpBound::UniformHolder: return 1.0 / 6.0;
    }
    return 0.0;
}

[[nodiscard]] constexpr bool has_witness(SharpBound b) noexcept {
    return std::find(kWitnessedBounds.begin(), kWitnessedBounds.end(), b) != kWitnessedBounds.end();
}

[[nodiscard]] constexpr bool is_uniform_family(SharpBound b) noexcept {
    return b == SharpBound::UniformMaxMax || b == SharpBound::UniformSumSum || b == SharpBound::UniformHolder;
}

[[nodiscard]] constexpr bool is_classical_family(SharpBound b) noexcept {
    return b == SharpBound::ClassicalMaxMax || b == SharpBound::ClassicalSumSum ||
           b == SharpBound::ClassicalHolder || is_uniform_family(b);
}

[[nodiscard]] constexpr bool uses_vectors(SharpBound b) noexcept {
    return b != SharpBound::Variance && b != SharpBound::PseudoVariance;
}

/// One inequality at fixed (n, d, norm), with enclosures of radius `radius` centered at the origin:
/// disk D(0, R), segment (-R, R), interval [-R, R], ball B(0, R).
struct SharpnessProblem {
    SharpBound bound = SharpBound::ScalarDisk;
    std::size_t n = 2;
    std::size_t d = 1;
    NormFamily norm = NormFamily::L2;
    double norm_exponent = 2.0;
    ScalarField field = ScalarField::Complex;
    double radius = 1.0;
    double holder_p = 2.0;

    [[nodiscard]] NormedSpace space() const { return NormedSpace::make(d, norm, norm_exponent, field); }
    [[nodiscard]] Disk disk() const { return Disk{Scalar{}, radius}; }
    [[nodiscard]] Segment segment() const { return Segment{Scalar(-radius), Scalar(radius)}; }
    [[nodiscard]] Interval interval() const { return Interval{-radius, radius}; }
    [[nodiscard]] Ball ball() const { return Ball{zeros(d), radius, space()}; }
};

/// A candidate configuration: weights, scalars and points.
struct Instance {
    std::vector<double> weights;
    ScalarSeq alpha;
    std::vector<Vec> x;
};

struct Witness {
    Instance instance;
    double expected_ratio = 1.0;
};

struct SearchResult {
    double best_ratio = 0.0;
    std::string best_inputs;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::size_t best_restart = 0;
    /// Evaluated instances with gap > bound beyond tolerance; must stay zero.
    std::size_t violations = 0;
    Instance best_instance;
};

inline void check_feasible(const SharpnessProblem& pb) {
    if (pb.n == 0 || pb.d == 0) throw Error(ErrorCode::InfeasibleProblem, "n and d must be positive");
    if (!(pb.radius > 0.0) || !std::isfinite(pb.radius)) {
        throw Error(ErrorCode::InfeasibleProblem, "enclosure radius must be positive");
    }
    if (is_classical_family(pb.bound) && pb.n < 2) {
        throw Error(ErrorCode::InfeasibleProblem, "forward-difference bounds need n >= 2");
    }
    (void)pb.space();
    if (is_classical_family(pb.bound)) (void)HolderPair::conjugate(pb.holder_p);
}

/// gap / bound for one instance; `bound_out` receives the bound, `gap_out` the gap.
[[nodiscard]] inline double evaluate_ratio(const SharpnessProblem& pb, const Instance& in, double* gap_out = nullptr,
                                           double* bound_out = nullptr) {
    const auto p = WeightVector::validate(in.weights, true);
    const auto space = pb.space();
    const auto report = [&]() -> BoundReport {
        switch (pb.bound) {
            case SharpBound::ScalarDisk:
                return bound_scalar_disk(in.alpha, VectorSeq(space, in.x), p, pb.disk());
            case SharpBound::Segment:
                return bound_complex_segment(in.alpha, VectorSeq(space, in.x), p, pb.segment());
            case SharpBound::Interval:
                return bound_real_interval(in.alpha, VectorSeq(space, in.x), p, pb.interval());
            case SharpBound::VectorBall:
                return bound_vector_ball(in.alpha, VectorSeq(space, in.x), p, pb.ball());
            case SharpBound::Variance: return variance_bound(in.alpha, p, pb.segment());
            case SharpBound::PseudoVariance: return pseudo_variance_bound(in.alpha, p, pb.segment());
            default: break;
        }
        const auto h = HolderPair::conjugate(pb.holder_p);
        if (is_uniform_family(pb.bound)) return classical_bounds_uniform(in.alpha, VectorSeq(space, in.x), h);
        return classical_bounds(in.alpha, VectorSeq(space, in.x), p, h);
    }();
    const BoundEntry& e = report.entry(to_string(pb.bound));
    if (gap_out != nullptr) *gap_out = report.gap;
    if (bound_out != nullptr) *bound_out = e.bound;
    return e.ratio;
}

/// The n = 2 equality configuration from the proofs, padded with zero-weight points for n > 2.
/// For the disk-type bounds `p1` is the first weight; the variance bounds need p1 = 1/2.
[[nodiscard]] inline Witness analytic_witness(const SharpnessProblem& pb, double p1 = 0.5) {
    if (!has_witness(pb.bound)) {
        throw Error(ErrorCode::NoKnownWitness,
                    "no equality configuration is known for '" + std::string(to_string(pb.bound)) + "'");
    }
    check_feasible(pb);
    if (pb.n < 2) throw Error(ErrorCode::NoKnownWitness, "equality witnesses need n >= 2");
    if (!(p1 > 0.0 && p1 < 1.0)) throw Error(ErrorCode::InvalidParameter, "p1 must lie in (0, 1)");
    const double R = pb.radius;
    Instance in;
    in.weights.assign(pb.n, 0.0);
    in.weights[0] = p1;
    in.weights[1] = 1.0 - p1;
    in.alpha.assign(pb.n, Scalar{});
    in.alpha[0] = Scalar(-R);
    in.alpha[1] = Scalar(R);
    if (uses_vectors(pb.bound)) {
        in.x.assign(pb.n, zeros(pb.d));
        if (pb.bound == SharpBound::VectorBall) {
            in.x[0][0] = Scalar(-R);
            in.x[1][0] = Scalar(R);
            in.alpha[0] = Scalar(0.0);
            in.alpha[1] = Scalar(1.0);
        } else {
            in.x[1][0] = Scalar(1.0);
        }
    }
    if (pb.bound == SharpBound::Variance || pb.bound == SharpBound::PseudoVariance) {
        in.weights[0] = 0.5;
        in.weights[1] = 0.5;
    }
    return Witness{std::move(in), 1.0};
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_scalar(Scalar z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

inline std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), 0x67727573u};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

// Flat parameterization of an instance for coordinate-wise perturbation.
class Layout {
public:
    explicit Layout(const SharpnessProblem& pb)
        : pb_(pb),
          search_weights_(!is_uniform_family(pb.bound)),
          complex_alpha_(pb.bound != SharpBound::Interval && pb.field == ScalarField::Complex),
          complex_x_(pb.field == ScalarField::Complex),
          with_x_(uses_vectors(pb.bound)) {}

    [[nodiscard]] std::size_t size() const {
        std::size_t s = 0;
        if (search_weights_) s += pb_.n;
        s += pb_.n * (complex_alpha_ ? 2 : 1);
        if (with_x_) s += pb_.n * pb_.d * (complex_x_ ? 2 : 1);
        return s;
    }

    // Typical magnitude of each coordinate, used to scale steps.
    [[nodiscard]] double scale(std::size_t k) const {
        return (search_weights_ && k < pb_.n) ? 1.0 : pb_.radius;
    }

    [[nodiscard]] std::vector<double> flatten(const Instance& in) const {
        std::vector<double> t;
        t.reserve(size());
        if (search_weights_) t.insert(t.end(), in.weights.begin(), in.weights.end());
        for (const auto& a : in.alpha) {
            t.push_back(a.real());
            if (complex_alpha_) t.push_back(a.imag());
        }
        if (with_x_) {
            for (const auto& v : in.x) {
                for (const auto& c : v) {
                    t.push_back(c.real());
                    if (complex_x_) t.push_back(c.imag());
                }
            }
        }
        return t;
    }

    [[nodiscard]] Instance unflatten(const std::vector<double>& t) const {
        Instance in;
        std::size_t k = 0;
        if (search_weights_) {
            in.weights.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pb_.n));
            k = pb_.n;
        } else {
            in.weights.assign(pb_.n, 1.0 / static_cast<double>(pb_.n));
        }
        in.alpha.resize(pb_.n);
        for (auto& a : in.alpha) {
            const double re = t[k++];
            const double im = complex_alpha_ ? t[k++] : 0.0;
            a = Scalar(re, im);
        }
        if (with_x_) {
            in.x.assign(pb_.n, zeros(pb_.d));
            for (auto& v : in.x) {
                for (auto& c : v) {
                    const double re = t[k++];
                    const double im = complex_x_ ? t[k++] : 0.0;
                    c = Scalar(re, im);
                }
            }
        }
        return in;
    }

    // Clamp weights and renormalize; shrink scalars and points radially into their enclosures.
    void project(Instance& in) const {
        double total = 0.0;
        for (auto& w : in.weights) {
            w = std::max(w, 0.0);
            total += w;
        }
        if (!(total > 0.0)) {
            in.weights.assign(pb_.n, 1.0 / static_cast<double>(pb_.n));
        } else {
            for (auto& w : in.weights) w /= total;
        }
        const double R = pb_.radius;
        for (auto& a : in.alpha) {
            if (pb_.bound == SharpBound::Interval) {
                a = Scalar(std::clamp(a.real(), -R, R));
            } else if (std::abs(a) > R) {
                a *= R / std::abs(a);
            }
        }
        if (with_x_) {
            const auto space = pb_.space();
            for (auto& v : in.x) {
                const double nv = space.norm(v);
                if (nv > R) v = scaled(R / nv, v);
            }
        }
    }

    [[nodiscard]] Instance sample(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_real_distribution<double> sym(-1.0, 1.0);
        const double R = pb_.radius;
        Instance in;
        in.weights.resize(pb_.n);
        for (auto& w : in.weights) w = search_weights_ ? unit(rng) + 1e-3 : 1.0;
        in.alpha.resize(pb_.n);
        for (auto& a : in.alpha) {
            if (complex_alpha_) {
                a = std::polar(R * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            } else {
                a = Scalar(R * sym(rng));
            }
        }
        if (with_x_) {
            in.x.assign(pb_.n, zeros(pb_.d));
            for (auto& v : in.x) {
                for (auto& c : v) c = Scalar(R * sym(rng), complex_x_ ? R * sym(rng) : 0.0);
            }
        }
        project(in);
        return in;
    }

private:
    SharpnessProblem pb_;
    bool search_weights_;
    bool complex_alpha_;
    bool complex_x_;
    bool with_x_;
};

}  // namespace detail

/// Compact JSON rendering of an instance with 17 significant digits.
[[nodiscard]] inline std::string serialize_instance(const Instance& in) {
    std::string s = "{\"weights\":[";
    for (std::size_t i = 0; i < in.weights.size(); ++i) {
        if (i) s += ",";
        s += detail::format_double(in.weights[i]);
    }
    s += "],\"alpha\":[";
    for (std::size_t i = 0; i < in.alpha.size(); ++i) {
        if (i) s += ",";
        s += detail::format_scalar(in.alpha[i]);
    }
    s += "],\"x\":[";
    for (std::size_t i = 0; i < in.x.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t c = 0; c < in.x[i].size(); ++c) {
            if (c) s += ",";
            s += detail::format_scalar(in.x[i][c]);
        }
        s += "]";
    }
    return s + "]}";
}

/// Multi-restart stochastic ascent of gap/bound over admissible instances.
/// Restart 0 starts from the analytic witness when one exists. Each restart perturbs one
/// coordinate at a time, projects back onto the constraints and keeps only improvements;
/// the step halves after a sweep with no improvement. Deterministic in `seed`.
[[nodiscard]] inline SearchResult search_max_ratio(const SharpnessProblem& pb, std::size_t budget,
                                                   std::size_t restarts, std::uint64_t seed,
                                                   Tolerance tol = {}) {
    if (restarts == 0) throw Error(ErrorCode::InvalidParameter, "restarts must be >= 1");
    check_feasible(pb);
    const detail::Layout layout(pb);
    const std::size_t dim = layout.size();

    SearchResult result;
    result.seed = seed;
    result.best_ratio = -1.0;

    auto score = [&](const Instance& in) {
        double gap = 0.0, bound = 0.0;
        const double r = evaluate_ratio(pb, in, &gap, &bound);
        ++result.iterations;
        if (!holds(gap, bound, tol)) ++result.violations;
        return r;
    };

    for (std::size_t restart = 0; restart < restarts; ++restart) {
        std::mt19937_64 rng(detail::restart_seed(seed, restart));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Instance current = (restart == 0 && has_witness(pb.bound) && pb.n >= 2) ? analytic_witness(pb).instance
                                                                                : layout.sample(rng);
        double current_ratio = score(current);
        std::vector<double> theta = layout.flatten(current);

        double step = 0.25;
        bool improved_in_sweep = false;
        for (std::size_t it = 0; it < budget; ++it) {
            const std::size_t k = it % dim;
            std::vector<double> trial = theta;
            trial[k] += step * layout.scale(k) * gauss(rng);
            Instance cand = layout.unflatten(trial);
            layout.project(cand);
            const double r = score(cand);
            if (r > current_ratio) {
                current_ratio = r;
                current = std::move(cand);
                theta = layout.flatten(current);
                improved_in_sweep = true;
            }
            if (k + 1 == dim) {
                if (!improved_in_sweep) step = std::max(step * 0.5, 1e-9);
                improved_in_sweep = false;
            }
        }
        if (current_ratio > result.best_ratio) {
            result.best_ratio = current_ratio;
            result.best_restart = restart;
            result.best_instance = current;
        }
    }
    result.best_inputs = serialize_instance(result.best_instance);
    return result;
}

enum class Verdict { Attained, Consistent, Violation };

[[nodiscard]] constexpr std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Attained: return "ATTAINED";
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

inline constexpr double kAttainedThreshold = 1.0 - 1e-6;

struct SharpnessConfig {
    std::vector<SharpBound> bounds{kWitnessedBounds.begin(), kWitnessedBounds.end()};
    std::size_t n = 2;
    std::size_t d = 1;
    NormFamily norm = NormFamily::L2;
    double norm_exponent = 2.0;
    ScalarField field = ScalarField::Complex;
    double holder_p = 2.0;
    std::size_t budget = 1000;
    std::size_t restarts = 8;
    std::uint64_t seed = 0;
    Tolerance tol{};
};

struct SharpnessRow {
    SharpBound bound = SharpBound::ScalarDisk;
    double claimed_constant = 0.0;
    std::optional<double> witness_ratio;
    double searched_ratio = 0.0;
    SearchResult search;
    Verdict verdict = Verdict::Consistent;
};

[[nodiscard]] inline SharpnessProblem make_problem(const SharpnessConfig& cfg, SharpBound b) {
    SharpnessProblem pb;
    pb.bound = b;
    pb.n = cfg.n;
    pb.d = cfg.d;
    pb.norm = cfg.norm;
    pb.norm_exponent = cfg.norm_exponent;
    pb.field = cfg.field;
    pb.holder_p = cfg.holder_p;
    return pb;
}

[[nodiscard]] inline std::vector<SharpnessRow> sharpness_report(const SharpnessConfig& cfg) {
    std::vector<SharpnessRow> rows;
    for (SharpBound b : cfg.bounds) {
        const SharpnessProblem pb = make_problem(cfg, b);
        SharpnessRow row;
        row.bound = b;
        row.claimed_constant = claimed_constant(b);
        if (has_witness(b) && pb.n >= 2) row.witness_ratio = evaluate_ratio(pb, analytic_witness(pb).instance);
        row.search = search_max_ratio(pb, cfg.budget, cfg.restarts, cfg.seed, cfg.tol);
        row.searched_ratio = row.search.best_ratio;
        const double best = std::max(row.searched_ratio, row.witness_ratio.value_or(0.0));
        if (row.search.violations > 0 || best > 1.0 + cfg.tol.rel) {
            row.verdict = Verdict::Violation;
        } else if (best >= kAttainedThreshold) {
            row.verdict = Verdict::Attained;
        } else {
            row.verdict = Verdict::Consistent;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gruss
