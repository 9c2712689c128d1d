#pragma once

#include <complex>
#include <vector>

#include "cvsheet/symbol.hpp"

namespace cvsheet {

// Discrete (delta, eta) lattice for the transform in (t, x1).  Samples live
// on [0, t_win) x [0, x_win); n_t and n_x must be powers of two.  gamma is
// the default exponential weight of the associated Sobolev norms.
struct SpectralGrid {
    double t_win;
    double x_win;
    int n_t;
    int n_x;
    double gamma;

    double dt() const { return t_win / n_t; }
    double dx() const { return x_win / n_x; }
    double t(int it) const { return it * dt(); }
    double x(int ix) const { return ix * dx(); }
    // signed lattice frequencies (Nyquist goes negative)
    double delta(int jt) const;
    double eta(int jx) const;
    size_t idx(int it, int ix) const { return static_cast<size_t>(it) * n_x + ix; }
    size_t size() const { return static_cast<size_t>(n_t) * n_x; }
    double cell() const { return dt() * dx(); }
    double lambda2(int jt, int jx, double gamma_w) const {
        const double d = delta(jt), e = eta(jx);
        return gamma_w * gamma_w + d * d + e * e;
    }
};

SpectralGrid make_spectral_grid(double t_win, double x_win, int n_t, int n_x, double gamma);

// In-place 2-D DFT, t-major layout.  sign = -1 forward, +1 backward
// (unnormalized, FFTW convention).
void fft2(std::vector<Complex>& data, int n_t, int n_x, int sign);

// Physical transform of exp(-gamma t) u on the lattice: DFT scaled by the
// cell area, approximating the continuous Fourier integral.
std::vector<Complex> forward_hat(const SpectralGrid& grid, const std::vector<double>& samples,
                                 double gamma);

// Inverse of forward_hat; max_imag_ratio reports the largest imaginary
// residue relative to the sample amplitude.
std::vector<double> inverse_from_hat(const SpectralGrid& grid, const std::vector<Complex>& hat,
                                     double* max_imag_ratio = nullptr);

// Enforce hat(-k) = conj(hat(k)) by pair averaging.
void conj_symmetrize(const SpectralGrid& grid, std::vector<Complex>& hat);

// Squared weighted Sobolev norm from lattice values of the transform:
//   (1/(2 pi)^2) sum Lambda^{2s} |hat|^2 * (ddelta deta).
double sobolev_norm_sq_hat(const SpectralGrid& grid, const std::vector<Complex>& hat, double s,
                           double gamma);

// ||u||_{H^s_gamma} for real samples u(t, x1) on the grid.
double sobolev_norm(const SpectralGrid& grid, const std::vector<double>& samples, double s,
                    double gamma);

}  // namespace cvsheet
