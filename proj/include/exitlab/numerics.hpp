// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace exitlab {

/// Neumaier-compensated accumulator. Summation order still matters for the
/// exact bit pattern, so callers that promise bitwise-reproducible results
/// must feed values in a fixed order.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void merge(const KahanSum& other) {
        add(other.sum_);
        add(other.comp_);
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double kahan_total(std::span<const double> xs) {
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
};

/// Weighted least-squares line y = a + b x. Weights must be nonnegative;
/// at least two points with positive weight are required.
inline LinearFit weighted_linear_fit(std::span<const double> x,
                                     std::span<const double> y,
                                     std::span<const double> w) {
    if (x.size() != y.size() || x.size() != w.size())
        throw std::invalid_argument("weighted_linear_fit: size mismatch");
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(w[i] > 0)) continue;
        ++used;
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
        swxx += w[i] * x[i] * x[i];
        swxy += w[i] * x[i] * y[i];
    }
    if (used < 2) throw std::invalid_argument("weighted_linear_fit: need >= 2 weighted points");
    const double denom = sw * swxx - swx * swx;
    if (denom == 0) throw std::invalid_argument("weighted_linear_fit: degenerate abscissae");
    LinearFit fit;
    fit.slope = (sw * swxy - swx * swy) / denom;
    fit.intercept = (swy - fit.slope * swx) / sw;
    double ss_res = 0, ss_tot = 0;
    const double ybar = swy / sw;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(w[i] > 0)) continue;
        const double fitted = fit.intercept + fit.slope * x[i];
        ss_res += w[i] * (y[i] - fitted) * (y[i] - fitted);
        ss_tot += w[i] * (y[i] - ybar) * (y[i] - ybar);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    // Residual-scaled slope error; used only as a rough significance gauge.
    if (used > 2) {
        const double sigma2 = ss_res / (static_cast<double>(used) - 2.0);
        fit.slope_stderr = std::sqrt(sigma2 * sw / denom);
    }
    return fit;
}

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(std::complex<double> z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace exitlab
