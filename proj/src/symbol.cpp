#include "cvsheet/symbol.hpp"

#include <cmath>
#include <stdexcept>

#include "cvsheet/errors.hpp"

namespace cvsheet {

double Frequency::lambda() const { return std::sqrt(lambda2()); }

Frequency Frequency::normalized() const {
    const double r = lambda();
    if (r == 0.0) throw std::domain_error("Frequency::normalized: origin");
    return scaled(1.0 / r);
}

namespace {

void check_in_xi(const Frequency& freq) {
    if (freq.is_origin()) throw std::domain_error("frequency lies at the origin, outside Xi");
    if (freq.gamma < 0.0) throw std::domain_error("frequency has Re tau < 0, outside Xi");
    if (!std::isfinite(freq.gamma) || !std::isfinite(freq.delta) || !std::isfinite(freq.eta))
        throw std::domain_error("non-finite frequency");
}

}  // namespace

Complex mu(Side side, const Frequency& freq, const MediumParams& params) {
    check_in_xi(freq);
    const double v = params.velocity(side);
    const double cb = params.c_b;

    if (freq.gamma > 0.0) {
        // Principal root; Im of the radicand is 2*gamma*(delta+v*eta)/cb^2,
        // so the radicand never touches the negative real axis and the
        // principal branch has strictly positive real part.
        const Complex z = (freq.tau() + Complex(0.0, v * freq.eta)) / cb;
        return std::sqrt(z * z + freq.eta * freq.eta);
    }

    // Boundary gamma = 0: continuous extension.
    if (freq.eta == 0.0) return Complex(0.0, freq.delta / cb);
    const double d = freq.delta + v * freq.eta;
    const double q = (d / cb) * (d / cb) - freq.eta * freq.eta;
    if (std::abs(q) < 1e-300) return Complex(0.0, 0.0);  // sonic point
    if (q < 0.0) return Complex(std::sqrt(-q), 0.0);
    return Complex(0.0, std::copysign(std::sqrt(q), d));
}

SymbolEval sigma(const Frequency& freq, const MediumParams& params) {
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const double cb2 = params.c_b * params.c_b;
    return SymbolEval{mp, mm, cb2 * (mp * mm - freq.eta * freq.eta), freq.gamma == 0.0};
}

Complex sigma_form1(const Frequency& freq, const MediumParams& params) {
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const Complex sum = mp + mm;
    if (std::abs(sum) <= 1e-13 * freq.lambda() / params.c_b) {
        throw singular_form_error("sigma_form1: mu+ + mu- vanishes at this frequency");
    }
    const Complex tau = freq.tau();
    const double v = params.v_plus;
    return tau * tau - v * v * freq.eta * freq.eta -
           2.0 * Complex(0.0, 1.0) * tau * freq.eta * v * (mp - mm) / sum;
}

}  // namespace cvsheet
