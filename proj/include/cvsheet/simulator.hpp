#pragma once

#include <complex>
#include <vector>

#include "cvsheet/medium.hpp"
#include "cvsheet/symbol.hpp"

namespace cvsheet {

// One x1-Fourier mode of the linearized system on two half-lines coupled
// through the interface.  Arrays run from the interface outward: up[i] sits
// at x3 = +i dx, dn[i] at x3 = -i dx.
struct SideFields {
    std::vector<Complex> h;
    std::vector<Complex> v1;
    std::vector<Complex> v3;
    std::vector<Complex> b2;
};

struct ModeState {
    double eta = 0.0;
    int n = 0;  // nodes per side = n + 1
    double dx = 0.0;
    double length = 0.0;
    double t = 0.0;
    SideFields up, dn;
    Complex f{};
    double last_interface_residual = 0.0;  // pre-enforcement jump defect
};

struct TrajSample {
    double t;
    Complex f;
    double interface_residual;
};

struct GrowthReport {
    double eta = 0.0;
    Complex lambda{};     // fitted complex rate of f(t)
    Complex predicted{};  // from the quartic analysis
    double rel_error = 0.0;
    bool null_run = false;
    bool valid = false;
    double max_outer_energy_ratio = 0.0;
    std::vector<TrajSample> trajectory;
};

struct SimOptions {
    int n_per_side = 2048;
    double cfl = 0.4;
    double domain_length = 0.0;  // 0: auto, (c_b + v) t_final + seed support
    double filter_strength = 0.1;
    int n_samples = 1024;
    double bump_center = 4.0;
    double bump_width = 0.8;
    bool collect_trajectory = false;
};

struct ThresholdRow {
    double v;
    double re_lambda;
    bool growing;
};

ModeState make_mode_state(double eta, double length, int n_per_side);

// Left-moving acoustic pulse on the upper side aimed at the interface, plus
// a small front offset; amplitude 0 leaves the state identically zero.
void seed_state(ModeState& state, const MediumParams& params, double amplitude,
                double center, double width);

double max_stable_dt(const ModeState& state, const MediumParams& params, double cfl);

// One classical RK4 step of the per-mode system.  Interface and far-field
// conditions are re-imposed on every stage state through characteristic
// ghost values; an 8th-order low-pass filter is applied after the update.
void step(ModeState& state, double dt, const MediumParams& params,
          double filter_strength = 0.1);

// Integrates a seeded mode to t_final and fits the complex rate of f(t):
// least squares on log|f| over the last half for the real part, unwrapped
// phase for the imaginary part.  Throws invalid_run_error if energy shows up
// in the outer 10% of the domain (truncation artefacts, run invalid).
GrowthReport run_mode(double eta, const MediumParams& params, double t_final,
                      double seed_amplitude, const SimOptions& options = {});

// Measured growth rates across a velocity list; the sign change of
// (re lambda - noise floor) brackets the critical velocity.
std::vector<ThresholdRow> scan_threshold(double c, double rho, double b2, double eta,
                                         const std::vector<double>& v_list, double t_final,
                                         const SimOptions& options = {});

}  // namespace cvsheet
