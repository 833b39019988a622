#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace gruss {

namespace detail {

// Neumaier's variant: also correct when the addend dominates the running sum.
inline void neumaier_add(double& sum, double& comp, double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
        comp += (sum - t) + v;
    } else {
        comp += (v - t) + sum;
    }
    sum = t;
}

}  // namespace detail

/// Compensated accumulator for double or std::complex<double>.
template <typename T>
class CompensatedSum {
    static_assert(std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>,
                  "CompensatedSum supports double and std::complex<double>");

public:
    CompensatedSum& operator+=(const T& v) noexcept {
        if constexpr (std::is_same_v<T, double>) {
            detail::neumaier_add(sum_re_, comp_re_, v);
        } else {
            detail::neumaier_add(sum_re_, comp_re_, v.real());
            detail::neumaier_add(sum_im_, comp_im_, v.imag());
        }
        return *this;
    }

    [[nodiscard]] T value() const noexcept {
        if constexpr (std::is_same_v<T, double>) {
            return sum_re_ + comp_re_;
        } else {
            return {sum_re_ + comp_re_, sum_im_ + comp_im_};
        }
    }

private:
    double sum_re_ = 0.0;
    double comp_re_ = 0.0;
    double sum_im_ = 0.0;
    double comp_im_ = 0.0;
};

}  // namespace gruss
