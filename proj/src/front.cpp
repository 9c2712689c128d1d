#include "cvsheet/front.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cvsheet/errors.hpp"
#include "cvsheet/quadrature.hpp"

namespace cvsheet {

namespace {

ForcingField make_empty(const SpectralGrid& grid, double y_max, int y_panels) {
    ForcingField f{};
    f.grid = grid;
    f.y_max = y_max;
    const gauss::Rule rule = gauss::composite(0.0, y_max, y_panels);
    f.y_nodes = rule.nodes;
    f.y_weights = rule.weights;
    f.k_plus.assign(grid.size() * rule.nodes.size(), 0.0);
    f.k_minus.assign(grid.size() * rule.nodes.size(), 0.0);
    f.windowing_residual = 0.0;
    return f;
}

// Largest sample magnitude on the window boundary relative to the peak.
double windowing_residual_of(const ForcingField& f) {
    double peak = 0.0, boundary = 0.0;
    const int nq = static_cast<int>(f.y_nodes.size());
    for (int it = 0; it < f.grid.n_t; ++it) {
        for (int ix = 0; ix < f.grid.n_x; ++ix) {
            const bool edge = it == 0 || it == f.grid.n_t - 1 || ix == 0 || ix == f.grid.n_x - 1;
            for (int q = 0; q < nq; ++q) {
                const double m = std::max(std::abs(f.k_plus[f.idx(it, ix, q)]),
                                          std::abs(f.k_minus[f.idx(it, ix, q)]));
                peak = std::max(peak, m);
                if (edge || q == nq - 1) boundary = std::max(boundary, m);
            }
        }
    }
    return peak > 0.0 ? boundary / peak : 0.0;
}

}  // namespace

SpectralGrid default_estimate_grid(double gamma) {
    return make_spectral_grid(32.0, 32.0, 256, 128, gamma);
}

ForcingField make_zero_forcing(const SpectralGrid& grid, double y_max, int y_panels) {
    ForcingField f = make_empty(grid, y_max, y_panels);
    f.preset = "zero";
    return f;
}

ForcingField make_gaussian_forcing(const SpectralGrid& grid, const MediumParams& params,
                                   const GaussianForcingShape& shape, double y_max,
                                   int y_panels) {
    ForcingField f = make_empty(grid, y_max, y_panels);
    f.preset = "gaussian";
    const double x0 = grid.x_win / 2.0;
    const double t0 = shape.t_center_frac * grid.t_win;
    const double t_width = shape.t_width_frac * grid.t_win;
    const double x_width = shape.x_width_frac * grid.x_win;
    const double a = shape.y_rate_scale / params.c_b;
    const int nq = static_cast<int>(f.y_nodes.size());
    for (int it = 0; it < grid.n_t; ++it) {
        const double gt = std::exp(-0.5 * std::pow((grid.t(it) - t0) / t_width, 2));
        for (int ix = 0; ix < grid.n_x; ++ix) {
            const double gx = std::exp(-0.5 * std::pow((grid.x(ix) - x0) / x_width, 2));
            for (int q = 0; q < nq; ++q) {
                const double gy = std::exp(-a * f.y_nodes[q]);
                f.k_plus[f.idx(it, ix, q)] = shape.amp_plus * gt * gx * gy;
                f.k_minus[f.idx(it, ix, q)] = shape.amp_minus * gt * gx * gy;
            }
        }
    }
    f.windowing_residual = windowing_residual_of(f);
    return f;
}

ForcingField load_forcing_csv(const std::string& path, const SpectralGrid& grid, double y_max,
                              int y_panels) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_forcing_csv: cannot open " + path);
    ForcingField f = make_empty(grid, y_max, y_panels);
    f.preset = "file:" + path;

    auto nearest = [](double value, double step) { return static_cast<int>(std::lround(value / step)); };
    std::string line;
    size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 't') continue;
        std::istringstream ss(line);
        std::string tok;
        double val[4];
        std::string side;
        for (int c = 0; c < 5; ++c) {
            if (!std::getline(ss, tok, ',')) throw std::runtime_error("load_forcing_csv: short row");
            if (c == 3) {
                side = tok;
            } else {
                val[c > 3 ? c - 1 : c] = std::stod(tok);
            }
        }
        ++row;
        const int it = nearest(val[0], grid.dt());
        const int ix = nearest(val[1], grid.dx());
        const double y = std::abs(val[2]);
        int q = 0;
        double best = 1e300;
        for (size_t i = 0; i < f.y_nodes.size(); ++i) {
            const double dist = std::abs(f.y_nodes[i] - y);
            if (dist < best) {
                best = dist;
                q = static_cast<int>(i);
            }
        }
        if (it < 0 || it >= grid.n_t || ix < 0 || ix >= grid.n_x)
            throw std::runtime_error("load_forcing_csv: sample off the grid");
        auto& dst = (side == "+" || side == "plus") ? f.k_plus : f.k_minus;
        dst[f.idx(it, ix, q)] = val[3];
    }
    f.windowing_residual = windowing_residual_of(f);
    return f;
}

ForcingHat transform_forcing(const ForcingField& forcing, double gamma,
                             const MediumParams& params) {
    const SpectralGrid& grid = forcing.grid;
    if (!(gamma >= 1.0)) throw std::domain_error("transform_forcing: gamma must be >= 1");
    const size_t n = grid.size();
    const int nq = static_cast<int>(forcing.y_nodes.size());

    // decaying roots per mode
    std::vector<Complex> mu_p(n), mu_m(n);
    for (int jt = 0; jt < grid.n_t; ++jt) {
        for (int jx = 0; jx < grid.n_x; ++jx) {
            const Frequency freq{gamma, grid.delta(jt), grid.eta(jx)};
            mu_p[grid.idx(jt, jx)] = mu(Side::plus, freq, params);
            mu_m[grid.idx(jt, jx)] = mu(Side::minus, freq, params);
        }
    }

    ForcingHat hat;
    hat.i_plus.assign(n, Complex{});
    hat.i_minus.assign(n, Complex{});
    hat.k_power.assign(n, 0.0);

    std::vector<Complex> slice(n);
    const double cell = grid.cell();
    for (int side = 0; side < 2; ++side) {
        const std::vector<double>& src = side == 0 ? forcing.k_plus : forcing.k_minus;
        const std::vector<Complex>& mu_side = side == 0 ? mu_p : mu_m;
        std::vector<Complex>& dst = side == 0 ? hat.i_plus : hat.i_minus;
        for (int q = 0; q < nq; ++q) {
            for (int it = 0; it < grid.n_t; ++it) {
                const double w = std::exp(-gamma * grid.t(it));
                for (int ix = 0; ix < grid.n_x; ++ix) {
                    slice[grid.idx(it, ix)] = w * src[forcing.idx(it, ix, q)];
                }
            }
            fft2(slice, grid.n_t, grid.n_x, -1);
            const double y = forcing.y_nodes[q];
            const double wq = forcing.y_weights[q];
            for (size_t i = 0; i < n; ++i) {
                const Complex khat = cell * slice[i];
                dst[i] += wq * std::exp(-mu_side[i] * y) * khat;
                hat.k_power[i] += wq * std::norm(khat);
            }
        }
    }
    return hat;
}

std::vector<Complex> front_rhs_hat(const SpectralGrid& grid, const ForcingHat& hat, double gamma,
                                   const MediumParams& params) {
    std::vector<Complex> g(grid.size());
    for (int jt = 0; jt < grid.n_t; ++jt) {
        for (int jx = 0; jx < grid.n_x; ++jx) {
            const size_t i = grid.idx(jt, jx);
            const Frequency freq{gamma, grid.delta(jt), grid.eta(jx)};
            const Complex mp = mu(Side::plus, freq, params);
            const Complex mm = mu(Side::minus, freq, params);
            g[i] = -(mm * hat.i_plus[i] - mp * hat.i_minus[i]) / (mp + mm);
        }
    }
    return g;
}

FrontSolution solve_front_hat(const SpectralGrid& grid, const std::vector<Complex>& g_hat,
                              double s, double gamma, const MediumParams& params,
                              double floor_tol) {
    if (!(gamma >= 1.0)) throw std::domain_error("solve_front_hat: gamma must be >= 1");
    if (g_hat.size() != grid.size()) throw std::invalid_argument("solve_front_hat: size mismatch");

    FrontSolution sol{};
    sol.grid = grid;
    sol.gamma = gamma;
    sol.f_hat.resize(grid.size());
    sol.min_symbol_norm = 1e300;
    for (int jt = 0; jt < grid.n_t; ++jt) {
        for (int jx = 0; jx < grid.n_x; ++jx) {
            const size_t i = grid.idx(jt, jx);
            const Frequency freq{gamma, grid.delta(jt), grid.eta(jx)};
            const Complex sig = sigma(freq, params).sigma;
            const double normalized = std::abs(sig) / freq.lambda2();
            sol.min_symbol_norm = std::min(sol.min_symbol_norm, normalized);
            if (normalized < floor_tol) {
                throw near_singular_error(
                    "solve_front_hat: |Sigma|/Lambda^2 = " + std::to_string(normalized) +
                    " below floor at mode (delta=" + std::to_string(freq.delta) +
                    ", eta=" + std::to_string(freq.eta) + ")");
            }
            sol.f_hat[i] = g_hat[i] / sig;
        }
    }
    conj_symmetrize(grid, sol.f_hat);
    sol.f_weighted = inverse_from_hat(grid, sol.f_hat, &sol.max_imag_ratio);
    sol.norms.push_back({s, gamma, std::sqrt(sobolev_norm_sq_hat(grid, sol.f_hat, s, gamma))});
    sol.norms.push_back(
        {s + 1.0, gamma, std::sqrt(sobolev_norm_sq_hat(grid, sol.f_hat, s + 1.0, gamma))});
    return sol;
}

FrontSolution solve_front(const ForcingField& forcing, double s, double gamma,
                          const MediumParams& params, double floor_tol) {
    const ForcingHat hat = transform_forcing(forcing, gamma, params);
    const std::vector<Complex> g = front_rhs_hat(forcing.grid, hat, gamma, params);
    return solve_front_hat(forcing.grid, g, s, gamma, params, floor_tol);
}

std::vector<EstimateRow> estimate_report(const ForcingField& forcing, double s,
                                         const std::vector<double>& gammas,
                                         const MediumParams& params) {
    const SpectralGrid& grid = forcing.grid;
    std::vector<EstimateRow> rows;
    rows.reserve(gammas.size());
    for (const double gamma : gammas) {
        const ForcingHat hat = transform_forcing(forcing, gamma, params);
        std::vector<Complex> g = front_rhs_hat(grid, hat, gamma, params);
        conj_symmetrize(grid, g);

        EstimateRow row{};
        row.gamma = gamma;
        row.s = s;
        double rhs = 0.0;
        for (int jt = 0; jt < grid.n_t; ++jt) {
            for (int jx = 0; jx < grid.n_x; ++jx) {
                rhs += std::pow(grid.lambda2(jt, jx, gamma), s) * hat.k_power[grid.idx(jt, jx)];
            }
        }
        rhs /= grid.t_win * grid.x_win;
        row.rhs = rhs;
        row.g_norm_sq = sobolev_norm_sq_hat(grid, g, s, gamma);
        if (rhs == 0.0) {
            row.null_row = true;
            rows.push_back(row);
            continue;
        }
        const FrontSolution sol = solve_front_hat(grid, g, s, gamma, params);
        const double f_sq = sol.norms[1].value * sol.norms[1].value;
        row.lhs = gamma * gamma * gamma * f_sq;
        row.ratio = row.lhs / rhs;
        row.chain_f_vs_g = row.g_norm_sq > 0.0 ? gamma * gamma * f_sq / row.g_norm_sq : 0.0;
        row.chain_g_vs_k = gamma * row.g_norm_sq / rhs;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cvsheet
