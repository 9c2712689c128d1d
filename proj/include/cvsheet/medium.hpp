#pragma once

#include <string>

namespace cvsheet {

enum class Side { plus, minus };

// Rectilinear background state of the two-sided flow, plus derived wave
// speeds.  The lower side moves with velocity -v_plus and carries a field of
// the same magnitude, so one set of scalars describes both half-spaces.
struct MediumParams {
    double v_plus;    // upper-side tangential velocity, > 0
    double c;         // background sound speed, > 0
    double rho;       // background density, > 0
    double b2;        // transverse magnetic field amplitude
    double c_alfven;  // sqrt(b2^2 / rho)
    double c_b;       // magneto-acoustic speed sqrt(c^2 + c_alfven^2)
    double mach;      // v_plus / c_b

    double velocity(Side s) const { return s == Side::plus ? v_plus : -v_plus; }
};

enum class Regime { unstable, critical, stable };

struct RegimeVerdict {
    Regime tag;
    double margin;  // mach - sqrt(2)
};

// Populates the derived speeds from the four primitive parameters.
// Throws std::domain_error unless v_plus, c, rho are all positive.
MediumParams derive_params(double v_plus, double c, double rho, double b2);

// Stable iff mach > sqrt(2) + tol, unstable iff mach < sqrt(2) - tol,
// critical in the band between.  The strict inequality of the analysis has
// no tolerance; the band exists only to keep float round-off honest.
RegimeVerdict classify_regime(const MediumParams& params, double tol_critical = 1e-12);

const char* to_string(Regime tag);

}  // namespace cvsheet
