#include "cvsheet/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace cvsheet {

MediumParams derive_params(double v_plus, double c, double rho, double b2) {
    if (!(v_plus > 0.0)) throw std::domain_error("derive_params: v_plus must be positive");
    if (!(c > 0.0)) throw std::domain_error("derive_params: c must be positive");
    if (!(rho > 0.0)) throw std::domain_error("derive_params: rho must be positive");

    MediumParams p{};
    p.v_plus = v_plus;
    p.c = c;
    p.rho = rho;
    p.b2 = b2;
    p.c_alfven = std::sqrt(b2 * b2 / rho);
    p.c_b = std::sqrt(c * c + b2 * b2 / rho);
    p.mach = v_plus / p.c_b;
    return p;
}

RegimeVerdict classify_regime(const MediumParams& params, double tol_critical) {
    const double margin = params.mach - std::sqrt(2.0);
    Regime tag = Regime::critical;
    if (margin > tol_critical) {
        tag = Regime::stable;
    } else if (margin < -tol_critical) {
        tag = Regime::unstable;
    }
    return RegimeVerdict{tag, margin};
}

const char* to_string(Regime tag) {
    switch (tag) {
        case Regime::unstable: return "Unstable";
        case Regime::critical: return "Critical";
        case Regime::stable: return "Stable";
    }
    return "?";
}

}  // namespace cvsheet
