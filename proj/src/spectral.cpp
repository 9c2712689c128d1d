#include "cvsheet/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace cvsheet {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

double SpectralGrid::delta(int jt) const {
    const int s = jt < n_t / 2 ? jt : jt - n_t;
    return 2.0 * std::acos(-1.0) * s / t_win;
}

double SpectralGrid::eta(int jx) const {
    const int s = jx < n_x / 2 ? jx : jx - n_x;
    return 2.0 * std::acos(-1.0) * s / x_win;
}

SpectralGrid make_spectral_grid(double t_win, double x_win, int n_t, int n_x, double gamma) {
    if (!(t_win > 0.0) || !(x_win > 0.0))
        throw std::invalid_argument("make_spectral_grid: windows must be positive");
    if (!power_of_two(n_t) || !power_of_two(n_x))
        throw std::invalid_argument("make_spectral_grid: n_t and n_x must be powers of two");
    if (!(gamma >= 1.0)) throw std::invalid_argument("make_spectral_grid: gamma must be >= 1");
    return SpectralGrid{t_win, x_win, n_t, n_x, gamma};
}

void fft2(std::vector<Complex>& data, int n_t, int n_x, int sign) {
    if (data.size() != static_cast<size_t>(n_t) * n_x)
        throw std::invalid_argument("fft2: size mismatch");
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_2d(n_t, n_x, raw, raw,
                                sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
}

std::vector<Complex> forward_hat(const SpectralGrid& grid, const std::vector<double>& samples,
                                 double gamma) {
    if (samples.size() != grid.size()) throw std::invalid_argument("forward_hat: size mismatch");
    std::vector<Complex> hat(grid.size());
    for (int it = 0; it < grid.n_t; ++it) {
        const double w = std::exp(-gamma * grid.t(it));
        for (int ix = 0; ix < grid.n_x; ++ix) {
            hat[grid.idx(it, ix)] = w * samples[grid.idx(it, ix)];
        }
    }
    fft2(hat, grid.n_t, grid.n_x, -1);
    const double cell = grid.cell();
    for (Complex& v : hat) v *= cell;
    return hat;
}

std::vector<double> inverse_from_hat(const SpectralGrid& grid, const std::vector<Complex>& hat,
                                     double* max_imag_ratio) {
    if (hat.size() != grid.size()) throw std::invalid_argument("inverse_from_hat: size mismatch");
    std::vector<Complex> work = hat;
    fft2(work, grid.n_t, grid.n_x, +1);
    const double scale = 1.0 / (grid.t_win * grid.x_win);
    std::vector<double> out(grid.size());
    double amp = 0.0, imag = 0.0;
    for (size_t i = 0; i < work.size(); ++i) {
        out[i] = work[i].real() * scale;
        amp = std::max(amp, std::abs(work[i].real()));
        imag = std::max(imag, std::abs(work[i].imag()));
    }
    if (max_imag_ratio) *max_imag_ratio = amp > 0.0 ? imag / amp : 0.0;
    return out;
}

void conj_symmetrize(const SpectralGrid& grid, std::vector<Complex>& hat) {
    for (int jt = 0; jt < grid.n_t; ++jt) {
        const int mt = (grid.n_t - jt) % grid.n_t;
        for (int jx = 0; jx < grid.n_x; ++jx) {
            const int mx = (grid.n_x - jx) % grid.n_x;
            if (jt > mt || (jt == mt && jx > mx)) continue;  // visit each pair once
            const size_t a = grid.idx(jt, jx);
            const size_t b = grid.idx(mt, mx);
            const Complex avg = 0.5 * (hat[a] + std::conj(hat[b]));
            hat[a] = avg;
            hat[b] = std::conj(avg);
        }
    }
}

double sobolev_norm_sq_hat(const SpectralGrid& grid, const std::vector<Complex>& hat, double s,
                           double gamma) {
    if (hat.size() != grid.size())
        throw std::invalid_argument("sobolev_norm_sq_hat: size mismatch");
    double acc = 0.0;
    for (int jt = 0; jt < grid.n_t; ++jt) {
        for (int jx = 0; jx < grid.n_x; ++jx) {
            const double l2 = grid.lambda2(jt, jx, gamma);
            acc += std::pow(l2, s) * std::norm(hat[grid.idx(jt, jx)]);
        }
    }
    return acc / (grid.t_win * grid.x_win);
}

double sobolev_norm(const SpectralGrid& grid, const std::vector<double>& samples, double s,
                    double gamma) {
    return std::sqrt(sobolev_norm_sq_hat(grid, forward_hat(grid, samples, gamma), s, gamma));
}

}  // namespace cvsheet
