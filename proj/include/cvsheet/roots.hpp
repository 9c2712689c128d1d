#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "cvsheet/medium.hpp"
#include "cvsheet/symbol.hpp"

namespace cvsheet {

// Roots of the neutral-mode quartic
//   X^4 - 2 (v^2 + c_b^2) X^2 + v^4 - 2 c_b^2 v^2 = 0,
// where candidate symbol zeros sit at tau = i X eta.
struct NeutralRoots {
    double x1_sq;  // v^2 + c_b^2 - sqrt(c_b^4 + 4 c_b^2 v^2)
    double x2_sq;  // v^2 + c_b^2 + sqrt(c_b^4 + 4 c_b^2 v^2)
    bool x1_accepted;
    bool x2_accepted;  // always false: X2 fails the branch condition
    // d(mu~+ mu~- + 1)/dX at X1; only defined in the stable regime.
    std::optional<Complex> simplicity;
};

enum class ZeroType { neutral_imaginary, unstable_real_part };

struct HemisphereZero {
    Frequency freq;   // on the unit hemisphere Xi_1
    double residual;  // |Sigma| at the point
    ZeroType type;
};

// Closed-form quartic roots with acceptance flags.  Acceptance is decided by
// evaluating the branch-correct roots at tau = i X eta and testing
// mu~+ mu~- = -1; squaring that relation is what produced the quartic, so
// half of its roots are spurious.
NeutralRoots neutral_roots(const MediumParams& params);

// True iff mu(tau = i X eta)/(i eta) satisfies mu~+ mu~- = -1 within tol.
// For X with negative imaginary part the point has Re tau > 0 (a growing
// mode); real X lands on the neutral boundary.  X is flipped to its partner
// -X when needed to stay inside Xi.
bool verify_acceptance(Complex x_candidate, const MediumParams& params, double eta = 1.0,
                       double tol = 1e-10);

// d(mu~+ mu~- + 1)/dX at X = X1:
//   2 X1 (X1^2 - v^2 - c_b^2) / (mu~+ mu~- c_b^4).
// Nonvanishing of this derivative is what makes the neutral roots simple.
// Throws regime_error unless mach > sqrt(2) (X1 real and nonzero).
Complex simplicity_derivative(const MediumParams& params);

// Multi-start search for zeros of |Sigma| on the unit hemisphere: coarse
// angular scan followed by damped Newton in tau on fixed-eta charts, with a
// boundary polish along gamma = 0.  Residuals are refined to <= 1e-10.
// In the unstable regime a missing growing mode is an internal contradiction
// and raises search_inconsistency_error.  At the critical point no zero is
// emitted (the double root X1 = 0 degenerates).
std::vector<HemisphereZero> find_hemisphere_zeros(const MediumParams& params,
                                                  double gamma_floor = 1e-6,
                                                  int grid_density = 96);

// Critical velocity by bisection of sign(X1^2) over v in (0, 10 c_b];
// equals sqrt(2) c_b up to the bisection tolerance.
double critical_velocity(double c, double rho, double b2);

}  // namespace cvsheet
