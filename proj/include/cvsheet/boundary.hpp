#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cvsheet/medium.hpp"
#include "cvsheet/symbol.hpp"

namespace cvsheet {

using ProfileFn = std::function<Complex(double)>;  // forcing vs distance from the interface

// Forcing functional W and the two half-line Laplace integrals
//   I(side) = int_0^inf exp(-mu y) Khat(side, y) dy
// that feed the jump system.  W = I+/(mu+ c_b^2) - I-/(mu- c_b^2).
struct WResult {
    Complex w;
    Complex i_plus;
    Complex i_minus;
    double truncation;  // crude bound on the tail dropped beyond y_max
    bool tail_warning;  // forcing had not decayed at y_max
};

// Boundary traces of the interior pressure profiles together with the front
// mode and forcing functional they were solved against.
struct TraceData {
    Complex h_plus_0;
    Complex h_minus_0;
    Complex dh_plus_0;
    Complex dh_minus_0;
    Complex f_hat;
    Complex w;
};

struct InteriorProfile {
    Side side;
    std::vector<double> x3;  // signed coordinates, interface first
    std::vector<Complex> h;
    Complex mu;
    double ode_residual;    // normalized second-difference residual, O(dx^2)
    double decay_residual;  // how far the traces sit from the decay condition
    bool bounded;
    bool growth_warning;
};

// Quadrature evaluation of W.  Requires gamma >= 1 so both integrals
// converge with a quantifiable tail.  khat_plus/minus take the distance
// y >= 0 from the interface (the lower forcing is K^-(., -y)).
WResult compute_W(const ProfileFn& khat_plus, const ProfileFn& khat_minus, const Frequency& freq,
                  const MediumParams& params, double y_max = 12.0, int panels = 24);

// Exact solve of the 4x4 trace system: continuity of c_b^2 h, the front jump
// in d3 h, and the two decay conditions.  i_plus/i_minus are the Laplace
// integrals from compute_W (or any manufactured values).
TraceData solve_jump_system(Complex f_hat, Complex i_plus, Complex i_minus, const Frequency& freq,
                            const MediumParams& params);

// Residual of the trace identity
//   c_b^2 (d3h+ + d3h-) = -4 i tau eta f v (mu+ - mu-)/(mu+ + mu-)
//                          + 2 c_b^2 mu+ mu- W / (mu+ + mu-),
// normalized by the magnitude of the participating terms.
double trace_identity(const TraceData& traces, const Frequency& freq, const MediumParams& params);

// Interior profile from the traces via the half-line solution formula.  The
// growing exponential is carried only through the decay-condition residual,
// so well-posed traces can never overflow.  khat takes distance from the
// interface, as in compute_W.
InteriorProfile reconstruct_profile(const TraceData& traces, const ProfileFn& khat, Side side,
                                    const Frequency& freq, const MediumParams& params,
                                    double length, int n_points, double y_max = 12.0);

}  // namespace cvsheet
