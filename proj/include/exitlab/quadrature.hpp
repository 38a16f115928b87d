// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace exitlab {

/// Value + error estimate of a definite integral.
struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& o) {
        value += o.value;
        abs_error_estimate += o.abs_error_estimate;
        evaluations += o.evaluations;
        return *this;
    }
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& result, double& abserr) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        fv1[j] = f(center - absc);
        fv2[j] = f(center + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        abserr = std::max(eps50 * resabs, abserr);
}

struct Interval {
    double a, b, result, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

} // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Stops when the total error estimate is below abs_tol + rel_tol*|value|.
template <typename F>
QuadratureResult integrate(const F& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_subdivisions = 2000) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::domain_error("integrate: non-finite interval");
    QuadratureResult out;
    if (a == b) return out;

    std::priority_queue<detail::Interval> heap;
    double r, e;
    detail::gk15(f, a, b, r, e);
    out.evaluations = 15;
    heap.push({a, b, r, e});
    double total = r, total_err = e;

    int splits = 0;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) &&
           splits < max_subdivisions) {
        detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b) {
            // interval no longer splittable in double precision
            heap.push(worst);
            break;
        }
        double r1, e1, r2, e2;
        detail::gk15(f, worst.a, mid, r1, e1);
        detail::gk15(f, mid, worst.b, r2, e2);
        out.evaluations += 30;
        total += (r1 + r2) - worst.result;
        total_err += (e1 + e2) - worst.error;
        heap.push({worst.a, mid, r1, e1});
        heap.push({mid, worst.b, r2, e2});
        ++splits;
    }
    // re-sum from the final partition for a tighter rounding profile
    double sum = 0, err = 0;
    while (!heap.empty()) {
        sum += heap.top().result;
        err += heap.top().error;
        heap.pop();
    }
    out.value = sum;
    out.abs_error_estimate = err;
    return out;
}

/// Integrates f over [a, inf) by truncating at the first point b >= a where
/// tail_bound(b) < tail_tol; the bound is added to the error estimate.
/// tail_bound(b) must dominate the integral of |f| over [b, inf).
template <typename F, typename TailBound>
QuadratureResult integrate_truncated(const F& f, double a,
                                     const TailBound& tail_bound,
                                     double tail_tol = 1e-12,
                                     double abs_tol = 1e-13,
                                     double rel_tol = 1e-12) {
    double b = std::max(a, 1.0) + 1.0;
    int guard = 0;
    while (tail_bound(b) >= tail_tol) {
        b = 2.0 * b;
        if (++guard > 200)
            throw std::runtime_error("integrate_truncated: tail bound does not decay");
    }
    QuadratureResult q = integrate(f, a, b, abs_tol, rel_tol, 4000);
    q.abs_error_estimate += tail_bound(b);
    return q;
}

} // namespace exitlab
