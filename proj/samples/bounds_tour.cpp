// Gap and bounds for a small complex dataset in C^2, then a sharpness search.

#include <cstdio>

#include "gruss/gruss.hpp"

using namespace gruss;

int main() {
    const auto sp = NormedSpace::make(2, NormFamily::L2, 2.0, ScalarField::Complex);
    const VectorSeq x(sp, {Vec{1.0, Scalar(0, 1)}, Vec{-0.5, 0.25}, Vec{Scalar(0.2, -0.3), -1.0}, Vec{0.0, 0.5}});
    const ScalarSeq alpha{Scalar(1, 0.5), Scalar(-0.5, 0), Scalar(0, -1), Scalar(0.25, 0.25)};
    const auto p = WeightVector::validate(std::vector<double>{0.1, 0.4, 0.3, 0.2});

    const Disk disk = enclose_scalars(alpha, EncloseMethod::MinDisk);
    const Ball ball = enclose_vectors(x);
    std::printf("gap %.6f\n", gruss_gap_direct(alpha, x, p).gap);

    for (const auto& r : {bound_scalar_disk(alpha, x, p, disk), bound_vector_ball_cbs(alpha, x, p, ball),
                          classical_bounds(alpha, x, p, HolderPair::conjugate(2.0))}) {
        for (const auto& e : r.entries) std::printf("  %-18s bound %.6f  ratio %.4f\n", e.id.c_str(), e.bound, e.ratio);
    }

    SharpnessProblem pb;
    pb.bound = SharpBound::ScalarDisk;
    pb.n = 3;
    const auto s = search_max_ratio(pb, 500, 4, 1);
    std::printf("scalar_disk search at n=3: best ratio %.12f after %zu iterations\n", s.best_ratio, s.iterations);
}
