#pragma once

#include <complex>

#include "cvsheet/medium.hpp"

namespace cvsheet {

using Complex = std::complex<double>;

// A point tau = gamma + i*delta, eta of the frequency set
//   Xi = { Re tau >= 0, (tau, eta) != (0, 0) }.
struct Frequency {
    double gamma = 0.0;
    double delta = 0.0;
    double eta = 0.0;

    Complex tau() const { return {gamma, delta}; }
    double lambda2() const { return gamma * gamma + delta * delta + eta * eta; }
    double lambda() const;
    bool is_origin() const { return gamma == 0.0 && delta == 0.0 && eta == 0.0; }

    Frequency scaled(double k) const { return {k * gamma, k * delta, k * eta}; }
    // Projection onto the unit hemisphere Xi_1 (|tau|^2 + eta^2 = 1).
    Frequency normalized() const;
};

struct SymbolEval {
    Complex mu_plus;
    Complex mu_minus;
    Complex sigma;
    bool on_boundary;  // gamma = 0 evaluation path taken
};

// Decaying root mu(side) = sqrt((tau + i v eta)^2 / c_b^2 + eta^2).
//
// For gamma > 0 this is the unique square root with positive real part.  On
// the boundary gamma = 0 the continuous extension is dispatched explicitly:
// with d = delta + v*eta and q = d^2/c_b^2 - eta^2,
//     eta = 0       ->  i*delta / c_b
//     q < 0         ->  sqrt(-q)              (mixed zone, real root)
//     q = 0         ->  0                     (sonic point)
//     q > 0         ->  i * sign(d) * sqrt(q) (radiating zone)
// The sign(d) rule reproduces both one-sided cases of the zone table and is
// exactly the gamma -> 0+ limit of the principal branch.
Complex mu(Side side, const Frequency& freq, const MediumParams& params);

// Front symbol via the globally defined product form
//   Sigma = c_b^2 * (mu+ * mu- - eta^2),
// valid on all of Xi including the boundary.
SymbolEval sigma(const Frequency& freq, const MediumParams& params);

// Original ratio form of the symbol,
//   Sigma = tau^2 - v^2 eta^2 - 2 i tau eta v (mu+ - mu-) / (mu+ + mu-).
// Agrees with sigma() wherever defined; kept as an independent cross-check.
// Throws singular_form_error where mu+ + mu- vanishes (supersonic tau = 0
// points), which is precisely why the product form is the primary one.
Complex sigma_form1(const Frequency& freq, const MediumParams& params);

}  // namespace cvsheet
