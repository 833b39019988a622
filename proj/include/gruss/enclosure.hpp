#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "gruss/error.hpp"
#include "gruss/sequence.hpp"
#include "gruss/space.hpp"

namespace gruss {

/// Slack allowed when testing membership of a point in an enclosure.
inline constexpr double kMembershipSlack = 1e-12;

/// Closed disk {z : |z - center| <= radius} in the scalar plane.
struct Disk {
    Scalar center;
    double radius = 0.0;
};

/// Pair (a, A) standing for the disk with center (a+A)/2 and radius |A-a|/2.
struct Segment {
    Scalar a;
    Scalar A;
};

/// Real interval [m, M].
struct Interval {
    double m = 0.0;
    double M = 0.0;
};

/// Closed ball around `center` in `space`.
struct Ball {
    Vec center;
    double radius = 0.0;
    NormedSpace space;
};

using Enclosure = std::variant<Disk, Segment, Interval, Ball>;

[[nodiscard]] inline Disk to_disk(const Segment& s) {
    return Disk{(s.a + s.A) / 2.0, std::abs(s.A - s.a) / 2.0};
}

[[nodiscard]] inline Segment to_segment(const Interval& iv) { return Segment{Scalar(iv.m), Scalar(iv.M)}; }

/// Segment whose induced disk is `d` (endpoints on the real diameter).
[[nodiscard]] inline Segment to_segment(const Disk& d) {
    return Segment{d.center - d.radius, d.center + d.radius};
}

/// One-dimensional ball in the modulus norm; used to route scalar data through vector bounds.
[[nodiscard]] inline Ball to_ball(const Disk& d, ScalarField field = ScalarField::Complex) {
    return Ball{Vec{d.center}, d.radius, NormedSpace::modulus(field)};
}

[[nodiscard]] inline Ball to_ball(const Segment& s) { return to_ball(to_disk(s)); }

[[nodiscard]] inline Ball to_ball(const Interval& iv) {
    return to_ball(to_disk(to_segment(iv)), ScalarField::Real);
}

inline void validate(const Disk& d) {
    if (!std::isfinite(d.radius) || d.radius < 0.0 || !std::isfinite(std::abs(d.center))) {
        throw Error(ErrorCode::InvalidEnclosure, "disk radius must be finite and >= 0");
    }
}

inline void validate(const Segment& s) {
    if (!std::isfinite(std::abs(s.a)) || !std::isfinite(std::abs(s.A))) {
        throw Error(ErrorCode::InvalidEnclosure, "segment endpoints must be finite");
    }
}

inline void validate(const Interval& iv) {
    if (!std::isfinite(iv.m) || !std::isfinite(iv.M) || iv.m > iv.M) {
        throw Error(ErrorCode::InvalidEnclosure, "interval requires finite m <= M");
    }
}

inline void validate(const Ball& b) {
    if (!std::isfinite(b.radius) || b.radius < 0.0) {
        throw Error(ErrorCode::InvalidEnclosure, "ball radius must be finite and >= 0");
    }
    if (b.center.size() != b.space.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "ball center dimension differs from its space");
    }
}

/// Both sides of the identity Re[(A-z)(conj z - conj a)] = |A-a|^2/4 - |z-(a+A)/2|^2.
struct DiskCheck {
    double re_form = 0.0;
    double disk_form = 0.0;
    bool member = false;
};

[[nodiscard]] inline DiskCheck disk_equivalence_check(Scalar z, Scalar a, Scalar A) {
    const double re_form = ((A - z) * (std::conj(z) - std::conj(a))).real();
    const double disk_form = 0.25 * std::norm(A - a) - std::norm(z - (a + A) / 2.0);
    return DiskCheck{re_form, disk_form, disk_form >= -kMembershipSlack};
}

[[nodiscard]] inline bool contains(const Disk& d, Scalar z, double slack = kMembershipSlack) {
    return std::abs(z - d.center) <= d.radius + slack;
}

/// Accepts either the quadratic form of the check or the distance form within `slack`.
[[nodiscard]] inline bool contains(const Segment& s, Scalar z, double slack = kMembershipSlack) {
    return disk_equivalence_check(z, s.a, s.A).disk_form >= -slack || contains(to_disk(s), z, slack);
}

[[nodiscard]] inline bool contains(const Interval& iv, Scalar z, double slack = kMembershipSlack) {
    return z.imag() == 0.0 && z.real() >= iv.m - slack && z.real() <= iv.M + slack;
}

[[nodiscard]] inline bool contains(const Ball& b, const Vec& x, double slack = kMembershipSlack) {
    return b.space.norm(sub(x, b.center)) <= b.radius + slack;
}

/// Index of the first element outside the enclosure, or size() if all are inside.
template <typename Region>
[[nodiscard]] std::size_t first_outside(const Region& r, const ScalarSeq& s, double slack = kMembershipSlack) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!contains(r, s[i], slack)) return i;
    }
    return s.size();
}

[[nodiscard]] inline std::size_t first_outside(const Ball& b, const VectorSeq& x, double slack = kMembershipSlack) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!contains(b, x[i], slack)) return i;
    }
    return x.size();
}

enum class EncloseMethod { MinDisk, MeanMax };

namespace detail {

inline double cross(Scalar u, Scalar v) { return u.real() * v.imag() - u.imag() * v.real(); }

inline Disk diameter_disk(Scalar p, Scalar q) {
    const Scalar c = (p + q) / 2.0;
    return Disk{c, std::max(std::abs(c - p), std::abs(c - q))};
}

// Circumcircle; radius < 0 signals collinear input.
inline Disk circumcircle(Scalar a, Scalar b, Scalar c) {
    const double ox = (std::min({a.real(), b.real(), c.real()}) + std::max({a.real(), b.real(), c.real()})) / 2;
    const double oy = (std::min({a.imag(), b.imag(), c.imag()}) + std::max({a.imag(), b.imag(), c.imag()})) / 2;
    const Scalar o(ox, oy);
    const Scalar pa = a - o, pb = b - o, pc = c - o;
    const double det = (pa.real() * (pb.imag() - pc.imag()) + pb.real() * (pc.imag() - pa.imag()) +
                        pc.real() * (pa.imag() - pb.imag())) *
                       2;
    if (det == 0.0) return Disk{Scalar{}, -1.0};
    const double ux = (std::norm(pa) * (pb.imag() - pc.imag()) + std::norm(pb) * (pc.imag() - pa.imag()) +
                       std::norm(pc) * (pa.imag() - pb.imag())) /
                      det;
    const double uy = (std::norm(pa) * (pc.real() - pb.real()) + std::norm(pb) * (pa.real() - pc.real()) +
                       std::norm(pc) * (pb.real() - pa.real())) /
                      det;
    const Scalar center = o + Scalar(ux, uy);
    return Disk{center, std::max({std::abs(center - a), std::abs(center - b), std::abs(center - c)})};
}

inline bool within(const Disk& d, Scalar p) {
    return d.radius >= 0.0 && std::abs(p - d.center) <= d.radius * (1.0 + 1e-14);
}

inline Disk disk_two_boundary(const std::vector<Scalar>& pts, std::size_t end, Scalar p, Scalar q) {
    const Disk circ = diameter_disk(p, q);
    Disk left{Scalar{}, -1.0};
    Disk right{Scalar{}, -1.0};
    const Scalar pq = q - p;
    for (std::size_t i = 0; i < end; ++i) {
        const Scalar r = pts[i];
        if (within(circ, r)) continue;
        const double side = cross(pq, r - p);
        const Disk c = circumcircle(p, q, r);
        if (c.radius < 0.0) continue;
        if (side > 0.0 && (left.radius < 0.0 || cross(pq, c.center - p) > cross(pq, left.center - p))) {
            left = c;
        } else if (side < 0.0 && (right.radius < 0.0 || cross(pq, c.center - p) < cross(pq, right.center - p))) {
            right = c;
        }
    }
    if (left.radius < 0.0 && right.radius < 0.0) return circ;
    if (left.radius < 0.0) return right;
    if (right.radius < 0.0) return left;
    return left.radius <= right.radius ? left : right;
}

inline Disk disk_one_boundary(const std::vector<Scalar>& pts, std::size_t end, Scalar p) {
    Disk c{p, 0.0};
    for (std::size_t i = 0; i < end; ++i) {
        const Scalar q = pts[i];
        if (within(c, q)) continue;
        c = c.radius == 0.0 ? diameter_disk(p, q) : disk_two_boundary(pts, i + 1, p, q);
    }
    return c;
}

}  // namespace detail

/// Smallest disk containing every scalar (randomized incremental construction with a fixed
/// shuffle seed, so the result is a pure function of the input).
[[nodiscard]] inline Disk min_enclosing_disk(const ScalarSeq& alpha) {
    if (alpha.empty()) throw Error(ErrorCode::EmptyInput, "cannot enclose an empty sequence");
    std::vector<Scalar> pts(alpha.begin(), alpha.end());
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::shuffle(pts.begin(), pts.end(), rng);
    Disk c{Scalar{}, -1.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (c.radius < 0.0 || !detail::within(c, pts[i])) c = detail::disk_one_boundary(pts, i + 1, pts[i]);
    }
    // Grow by rounding residue so membership holds exactly in floating point.
    for (const auto& z : alpha) c.radius = std::max(c.radius, std::abs(z - c.center));
    return c;
}

[[nodiscard]] inline Disk enclose_scalars(const ScalarSeq& alpha, EncloseMethod method = EncloseMethod::MinDisk) {
    if (alpha.empty()) throw Error(ErrorCode::EmptyInput, "cannot enclose an empty sequence");
    if (method == EncloseMethod::MinDisk) return min_enclosing_disk(alpha);
    CompensatedSum<Scalar> acc;
    for (const auto& z : alpha) acc += z;
    const Scalar center = acc.value() / static_cast<double>(alpha.size());
    double r = 0.0;
    for (const auto& z : alpha) r = std::max(r, std::abs(z - center));
    return Disk{center, r};
}

/// Ball centered at the unweighted mean point with radius the largest distance to it.
[[nodiscard]] inline Ball enclose_vectors(const VectorSeq& x) {
    if (x.size() == 0) throw Error(ErrorCode::EmptyInput, "cannot enclose an empty sequence");
    const Vec center = weighted_mean_vector(x, WeightVector::uniform(x.size()));
    double r = 0.0;
    for (const auto& v : x.points()) r = std::max(r, x.norm(sub(v, center)));
    return Ball{center, r, x.space()};
}

/// [min, max] of real data.
[[nodiscard]] inline Interval enclose_real(const ScalarSeq& alpha) {
    if (alpha.empty()) throw Error(ErrorCode::EmptyInput, "cannot enclose an empty sequence");
    if (!is_real(alpha)) throw Error(ErrorCode::NotReal, "interval enclosure needs real data");
    Interval iv{alpha.front().real(), alpha.front().real()};
    for (const auto& z : alpha) {
        iv.m = std::min(iv.m, z.real());
        iv.M = std::max(iv.M, z.real());
    }
    return iv;
}

}  // namespace gruss
