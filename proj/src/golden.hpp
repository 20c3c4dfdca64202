#pragma once

#include <functional>

namespace qaoa::detail {

inline constexpr double kGoldenRatio = 0.61803398874989484820;

// Golden-section maximization on [lo, hi] to the given interval tolerance.
inline double golden_max(const std::function<double(double)>& fn, double lo,
                         double hi, double tol) {
    double a = lo, b = hi;
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = fn(c), fd = fn(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace qaoa::detail
