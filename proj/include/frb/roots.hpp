#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "frb/errors.hpp"

namespace frb {

inline constexpr double kRootTol = 1e-12;
inline constexpr int kRootMaxIter = 200;

// Bracketed bisection. Requires g(lo) and g(hi) of opposite (or zero) sign.
// Converges to |g| < tol or interval width < tol; all solved quantities are O(1).
inline double bisect(const std::function<double(double)>& g, double lo, double hi,
                     double tol = kRootTol, int max_iter = kRootMaxIter,
                     const char* label = "bisect") {
    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::isnan(flo) || std::isnan(fhi) || flo * fhi > 0.0) {
        throw ConvergenceError(std::string(label) + ": no sign change on bracket");
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        double fm = g(mid);
        // width exit is far tighter than the residual target so the returned
        // point's residual lands safely inside tol
        if (std::abs(fm) < 0.1 * tol || hi - lo < 1e-3 * tol) return mid;
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double fm = g(mid);
    if (std::abs(fm) < 1e-9) return mid;  // loose fallback before declaring failure
    throw ConvergenceError(std::string(label) + ": residual above tolerance after max iterations");
}

// Central finite difference, used by comparative-statics cross-checks.
inline double central_diff(const std::function<double(double)>& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace frb
