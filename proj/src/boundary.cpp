#include "cvsheet/boundary.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "cvsheet/errors.hpp"
#include "cvsheet/quadrature.hpp"

namespace cvsheet {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_gamma_at_least_one(const Frequency& freq, const char* who) {
    if (!(freq.gamma >= 1.0)) {
        throw std::domain_error(std::string(who) + ": requires gamma >= 1");
    }
}

}  // namespace

WResult compute_W(const ProfileFn& khat_plus, const ProfileFn& khat_minus, const Frequency& freq,
                  const MediumParams& params, double y_max, int panels) {
    require_gamma_at_least_one(freq, "compute_W");
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const double cb2 = params.c_b * params.c_b;

    const gauss::Rule rule = gauss::composite(0.0, y_max, panels);
    Complex i_plus{}, i_minus{};
    double peak = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        const Complex kp = khat_plus(y);
        const Complex km = khat_minus(y);
        peak = std::max({peak, std::abs(kp), std::abs(km)});
        i_plus += rule.weights[i] * std::exp(-mp * y) * kp;
        i_minus += rule.weights[i] * std::exp(-mm * y) * km;
    }

    WResult out{};
    out.i_plus = i_plus;
    out.i_minus = i_minus;
    out.w = i_plus / (mp * cb2) - i_minus / (mm * cb2);
    const double tail_p = std::abs(khat_plus(y_max));
    const double tail_m = std::abs(khat_minus(y_max));
    out.truncation = std::exp(-mp.real() * y_max) * tail_p / mp.real() +
                     std::exp(-mm.real() * y_max) * tail_m / mm.real();
    out.tail_warning = std::max(tail_p, tail_m) > 1e-8 * std::max(peak, 1e-300);
    return out;
}

TraceData solve_jump_system(Complex f_hat, Complex i_plus, Complex i_minus, const Frequency& freq,
                            const MediumParams& params) {
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const double cb2 = params.c_b * params.c_b;
    if (std::abs(mp + mm) <= 1e-13 * freq.lambda() / params.c_b) {
        throw degenerate_frequency_error("solve_jump_system: mu+ + mu- vanishes (gamma = 0)");
    }

    // Unknowns: [h+(0), h-(0), d3h+(0), d3h-(0)].
    Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd b = Eigen::Vector4cd::Zero();
    a(0, 0) = cb2;
    a(0, 1) = -cb2;
    a(1, 2) = cb2;
    a(1, 3) = -cb2;
    b(1) = -4.0 * kI * freq.tau() * freq.eta * f_hat * params.v_plus;
    a(2, 0) = mp;
    a(2, 2) = 1.0;
    b(2) = i_plus / cb2;
    a(3, 1) = mm;
    a(3, 3) = -1.0;
    b(3) = i_minus / cb2;

    const Eigen::Vector4cd x = a.partialPivLu().solve(b);
    const double resid = (a * x - b).norm();
    const double scale = std::max(b.norm(), a.norm() * x.norm());
    if (scale > 0.0 && resid > 1e-10 * scale) {
        throw degenerate_frequency_error("solve_jump_system: ill-conditioned trace system");
    }

    TraceData out{};
    out.h_plus_0 = x(0);
    out.h_minus_0 = x(1);
    out.dh_plus_0 = x(2);
    out.dh_minus_0 = x(3);
    out.f_hat = f_hat;
    out.w = i_plus / (mp * cb2) - i_minus / (mm * cb2);
    return out;
}

double trace_identity(const TraceData& traces, const Frequency& freq, const MediumParams& params) {
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const double cb2 = params.c_b * params.c_b;
    const Complex sum = mp + mm;

    const Complex lhs = cb2 * (traces.dh_plus_0 + traces.dh_minus_0);
    const Complex term_front =
        -4.0 * kI * freq.tau() * freq.eta * traces.f_hat * params.v_plus * (mp - mm) / sum;
    const Complex term_forcing = 2.0 * cb2 * mp * mm / sum * traces.w;
    const double scale =
        std::max({std::abs(lhs), std::abs(term_front), std::abs(term_forcing)});
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - (term_front + term_forcing)) / scale;
}

InteriorProfile reconstruct_profile(const TraceData& traces, const ProfileFn& khat, Side side,
                                    const Frequency& freq, const MediumParams& params,
                                    double length, int n_points, double y_max) {
    require_gamma_at_least_one(freq, "reconstruct_profile");
    if (n_points < 8) throw std::invalid_argument("reconstruct_profile: n_points too small");

    const Complex m = mu(side, freq, params);
    const double cb2 = params.c_b * params.c_b;
    const Complex h0 = side == Side::plus ? traces.h_plus_0 : traces.h_minus_0;
    // the lower-side solution formula carries -d3h-(0)
    const Complex d = side == Side::plus ? traces.dh_plus_0 : -traces.dh_minus_0;

    const Complex a_minus = h0 - d / m;
    const Complex a_plus = h0 + d / m;
    const double y_hi = std::max(y_max, length);
    const Complex i_full = gauss::integrate(
        [&](double y) { return std::exp(-m * y) * khat(y); }, 0.0, y_hi,
        std::max(24, static_cast<int>(y_hi)));

    InteriorProfile out{};
    out.side = side;
    out.mu = m;
    const Complex r_decay = a_plus - i_full / (cb2 * m);
    const double r_scale = std::abs(a_plus) + std::abs(i_full / (cb2 * m)) + std::abs(h0);
    out.decay_residual = r_scale > 0.0 ? std::abs(r_decay) / r_scale : 0.0;
    out.growth_warning = out.decay_residual > 1e-10;
    const Complex r_used = out.growth_warning ? r_decay : Complex{};

    const double dx = length / n_points;
    // Forward/backward sweeps keep every exponent non-positive:
    //   p_i = int_0^{x_i} exp(-mu (x_i - y)) K dy
    //   q_i = int_{x_i}^{y_hi} exp(-mu (y - x_i)) K dy
    std::vector<Complex> p(n_points + 1), q(n_points + 1);
    const Complex decay_step = std::exp(-m * dx);
    p[0] = Complex{};
    for (int i = 1; i <= n_points; ++i) {
        const double xi = i * dx;
        const Complex local = gauss::integrate(
            [&](double y) { return std::exp(-m * (xi - y)) * khat(y); }, xi - dx, xi, 1);
        p[i] = decay_step * p[i - 1] + local;
    }
    q[n_points] = length < y_hi
                      ? gauss::integrate(
                            [&](double y) { return std::exp(-m * (y - length)) * khat(y); },
                            length, y_hi, std::max(8, static_cast<int>(y_hi - length)))
                      : Complex{};
    for (int i = n_points - 1; i >= 0; --i) {
        const double xi = i * dx;
        const Complex local = gauss::integrate(
            [&](double y) { return std::exp(-m * (y - xi)) * khat(y); }, xi, xi + dx, 1);
        q[i] = decay_step * q[i + 1] + local;
    }

    out.x3.resize(n_points + 1);
    out.h.resize(n_points + 1);
    const double orient = side == Side::plus ? 1.0 : -1.0;
    for (int i = 0; i <= n_points; ++i) {
        const double xi = i * dx;
        out.x3[i] = orient * xi;
        Complex val = 0.5 * std::exp(-m * xi) * a_minus + (p[i] + q[i]) / (2.0 * cb2 * m);
        if (out.growth_warning) val += 0.5 * std::exp(m * xi) * r_used;
        out.h[i] = val;
    }
    out.h[0] = h0;  // the formula reduces to the trace at the endpoint; keep it bit-exact

    // ODE residual by second differences, normalized
    const Complex adv = freq.tau() + kI * params.velocity(side) * freq.eta;
    const Complex coeff = adv * adv + cb2 * freq.eta * freq.eta;
    double worst = 0.0, scale = 0.0;
    for (int i = 1; i < n_points; ++i) {
        const Complex second = (out.h[i + 1] - 2.0 * out.h[i] + out.h[i - 1]) / (dx * dx);
        const double xi = i * dx;
        const Complex res = coeff * out.h[i] - cb2 * second - khat(xi);
        worst = std::max(worst, std::abs(res));
        scale = std::max({scale, std::abs(coeff * out.h[i]), std::abs(khat(xi))});
    }
    out.ode_residual = scale > 0.0 ? worst / scale : worst;

    const double tail =
        (std::abs(p[n_points]) + std::abs(q[n_points])) / (2.0 * cb2 * std::abs(m));
    out.bounded = !out.growth_warning &&
                  std::abs(out.h[n_points]) <= std::abs(out.h[0]) + tail + 1e-12 * std::abs(h0);
    return out;
}

}  // namespace cvsheet
