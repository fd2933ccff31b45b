#pragma once

#include <cmath>
#include <utility>

namespace stilde::detail {

struct Minimum {
    double arg;
    double value;
};

/// Golden-section search for a minimum of `f` on [lo, hi]; exact for unimodal f.
template <class F>
Minimum golden_section_min(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    Minimum best{lo, f(lo)};
    for (double u : {hi, c, d, 0.5 * (a + b)}) {
        double v = f(u);
        if (v < best.value) best = {u, v};
    }
    return best;
}

}  // namespace stilde::detail
