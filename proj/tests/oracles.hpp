#pragma once

// Test-side oracles, deliberately independent of the library's closed forms.

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Durand-Kerner iteration for all roots of
//   c[0] + c[1] x + ... + c[n] x^n.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> c) {
    const int n = static_cast<int>(c.size()) - 1;
    for (auto& v : c) v /= c.back();
    auto eval = [&](Complex x) {
        Complex acc = c[n];
        for (int i = n - 1; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    std::vector<Complex> r(n);
    const Complex seed{0.4, 0.9};
    Complex p = 1.0;
    for (int i = 0; i < n; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int it = 0; it < 200; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) denom *= r[i] - r[j];
            }
            const Complex delta = eval(r[i]) / denom;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

// Central finite difference of a scalar map.
template <typename F>
auto central_difference(const F& f, double x, double h) -> decltype(f(x)) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
