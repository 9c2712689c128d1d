#include "cvsheet/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvsheet/errors.hpp"
#include "cvsheet/roots.hpp"

namespace cvsheet {

namespace {

constexpr Complex kI{0.0, 1.0};

// 4th-order first derivative with respect to the array index, one-sided at
// the four outermost nodes.
void index_derivative(const std::vector<Complex>& u, std::vector<Complex>& du) {
    const int n = static_cast<int>(u.size()) - 1;
    du.resize(u.size());
    du[0] = (-25.0 * u[0] + 48.0 * u[1] - 36.0 * u[2] + 16.0 * u[3] - 3.0 * u[4]) / 12.0;
    du[1] = (-3.0 * u[0] - 10.0 * u[1] + 18.0 * u[2] - 6.0 * u[3] + u[4]) / 12.0;
    for (int i = 2; i <= n - 2; ++i) {
        du[i] = (u[i - 2] - 8.0 * u[i - 1] + 8.0 * u[i + 1] - u[i + 2]) / 12.0;
    }
    du[n - 1] = (3.0 * u[n] + 10.0 * u[n - 1] - 18.0 * u[n - 2] + 6.0 * u[n - 3] - u[n - 4]) / 12.0;
    du[n] = (25.0 * u[n] - 48.0 * u[n - 1] + 36.0 * u[n - 2] - 16.0 * u[n - 3] + 3.0 * u[n - 4]) / 12.0;
}

struct Deriv {
    SideFields up, dn;
    Complex f{};
};

void resize_like(SideFields& d, int n) {
    d.h.assign(n + 1, Complex{});
    d.v1.assign(n + 1, Complex{});
    d.v3.assign(n + 1, Complex{});
    d.b2.assign(n + 1, Complex{});
}

// combined pressure-like variable u = c^2 h + (b2/rho) B2
void pressure_combo(const SideFields& s, const MediumParams& p, std::vector<Complex>& out) {
    const double k = p.b2 / p.rho;
    out.resize(s.h.size());
    for (size_t i = 0; i < s.h.size(); ++i) out[i] = p.c * p.c * s.h[i] + k * s.b2[i];
}

void side_rhs(const SideFields& s, double orient, double v_side, double eta, double dx,
              const MediumParams& p, SideFields& d, std::vector<Complex>& scratch_u,
              std::vector<Complex>& scratch_du, std::vector<Complex>& scratch_dv3) {
    const size_t m = s.h.size();
    pressure_combo(s, p, scratch_u);
    index_derivative(scratch_u, scratch_du);
    index_derivative(s.v3, scratch_dv3);
    const double inv = orient / dx;
    const Complex adv = -kI * v_side * eta;
    for (size_t i = 0; i < m; ++i) {
        const Complex d3v3 = scratch_dv3[i] * inv;
        const Complex d3u = scratch_du[i] * inv;
        const Complex divv = kI * eta * s.v1[i] + d3v3;
        d.h[i] = adv * s.h[i] - divv;
        d.v1[i] = adv * s.v1[i] - kI * eta * scratch_u[i];
        d.v3[i] = adv * s.v3[i] - d3u;
        d.b2[i] = adv * s.b2[i] - p.b2 * divv;
    }
}

void compute_rhs(const ModeState& y, const MediumParams& p, Deriv& d, std::vector<Complex>& su,
                 std::vector<Complex>& sdu, std::vector<Complex>& sdv) {
    side_rhs(y.up, +1.0, p.v_plus, y.eta, y.dx, p, d.up, su, sdu, sdv);
    side_rhs(y.dn, -1.0, -p.v_plus, y.eta, y.dx, p, d.dn, su, sdu, sdv);
    d.f = y.up.v3[0] - kI * y.eta * p.v_plus * y.f;
}

// Incoming characteristics at the interface and the far ends are replaced by
// the values the jump conditions and the non-reflecting closure prescribe.
// The zero-speed combinations (v1 and B2 - b2 h) are left untouched.
void enforce(ModeState& y, const MediumParams& p) {
    const double cb = p.c_b;
    const double cb2 = cb * cb;
    const double k = p.b2 / p.rho;

    auto u_of = [&](const SideFields& s, size_t i) { return p.c * p.c * s.h[i] + k * s.b2[i]; };
    auto set_u = [&](SideFields& s, size_t i, Complex u_new) {
        const Complex w = s.b2[i] - p.b2 * s.h[i];
        s.h[i] = (u_new - k * w) / cb2;
        s.b2[i] = w + p.b2 * s.h[i];
    };

    // interface: outgoing r- from above, outgoing r+ from below, plus the
    // velocity jump carried by the front
    const Complex r_up_out = u_of(y.up, 0) - cb * y.up.v3[0];
    const Complex r_dn_out = u_of(y.dn, 0) + cb * y.dn.v3[0];
    const Complex jump = 2.0 * p.v_plus * kI * y.eta * y.f;
    const Complex v3_up = 0.5 * ((r_dn_out - r_up_out) / cb + jump);
    const Complex v3_dn = v3_up - jump;
    const Complex u0 = r_up_out + cb * v3_up;
    y.up.v3[0] = v3_up;
    y.dn.v3[0] = v3_dn;
    set_u(y.up, 0, u0);
    set_u(y.dn, 0, u0);

    // far ends: zero the incoming characteristic
    const size_t last = y.up.h.size() - 1;
    {
        const Complex r_keep = u_of(y.up, last) + cb * y.up.v3[last];  // outgoing r+
        set_u(y.up, last, 0.5 * r_keep);
        y.up.v3[last] = 0.5 * r_keep / cb;
    }
    {
        const Complex r_keep = u_of(y.dn, last) - cb * y.dn.v3[last];  // outgoing r-
        set_u(y.dn, last, 0.5 * r_keep);
        y.dn.v3[last] = -0.5 * r_keep / cb;
    }
}

double interface_defect(const ModeState& y, const MediumParams& p) {
    const double k = p.b2 / p.rho;
    auto u_of = [&](const SideFields& s, size_t i) { return p.c * p.c * s.h[i] + k * s.b2[i]; };
    const Complex du = u_of(y.up, 0) - u_of(y.dn, 0);
    const Complex dv = (y.up.v3[0] - y.dn.v3[0]) - 2.0 * p.v_plus * kI * y.eta * y.f;
    double scale = std::abs(y.f);
    for (size_t i = 0; i < y.up.h.size(); ++i) {
        scale = std::max({scale, std::abs(y.up.v3[i]), std::abs(y.dn.v3[i]),
                          std::abs(u_of(y.up, i)), std::abs(u_of(y.dn, i))});
    }
    return scale > 0.0 ? (std::abs(du) + std::abs(dv)) / scale : 0.0;
}

void filter_array(std::vector<Complex>& u, double strength) {
    const int n = static_cast<int>(u.size()) - 1;
    if (n < 9) return;
    static thread_local std::vector<Complex> tmp;
    tmp = u;
    for (int i = 4; i <= n - 4; ++i) {
        const Complex d8 = tmp[i - 4] - 8.0 * tmp[i - 3] + 28.0 * tmp[i - 2] - 56.0 * tmp[i - 1] +
                           70.0 * tmp[i] - 56.0 * tmp[i + 1] + 28.0 * tmp[i + 2] -
                           8.0 * tmp[i + 3] + tmp[i + 4];
        u[i] -= strength / 256.0 * d8;
    }
}

void filter_state(ModeState& y, double strength) {
    if (strength <= 0.0) return;
    for (SideFields* s : {&y.up, &y.dn}) {
        filter_array(s->h, strength);
        filter_array(s->v1, strength);
        filter_array(s->v3, strength);
        filter_array(s->b2, strength);
    }
}

void axpy_fields(SideFields& out, const SideFields& base, double a, const SideFields& d) {
    const size_t m = base.h.size();
    for (size_t i = 0; i < m; ++i) {
        out.h[i] = base.h[i] + a * d.h[i];
        out.v1[i] = base.v1[i] + a * d.v1[i];
        out.v3[i] = base.v3[i] + a * d.v3[i];
        out.b2[i] = base.b2[i] + a * d.b2[i];
    }
}

void combine_rk4(SideFields& out, const SideFields& base, double dt, const SideFields& k1,
                 const SideFields& k2, const SideFields& k3, const SideFields& k4) {
    const size_t m = base.h.size();
    const double c = dt / 6.0;
    for (size_t i = 0; i < m; ++i) {
        out.h[i] = base.h[i] + c * (k1.h[i] + 2.0 * k2.h[i] + 2.0 * k3.h[i] + k4.h[i]);
        out.v1[i] = base.v1[i] + c * (k1.v1[i] + 2.0 * k2.v1[i] + 2.0 * k3.v1[i] + k4.v1[i]);
        out.v3[i] = base.v3[i] + c * (k1.v3[i] + 2.0 * k2.v3[i] + 2.0 * k3.v3[i] + k4.v3[i]);
        out.b2[i] = base.b2[i] + c * (k1.b2[i] + 2.0 * k2.b2[i] + 2.0 * k3.b2[i] + k4.b2[i]);
    }
}

double state_energy(const ModeState& y, double frac_outer, double* outer) {
    double total = 0.0, out = 0.0;
    const int n = y.n;
    const int cut = static_cast<int>(std::floor((1.0 - frac_outer) * n));
    for (const SideFields* s : {&y.up, &y.dn}) {
        for (int i = 0; i <= n; ++i) {
            const double e = std::norm(s->h[i]) + std::norm(s->v1[i]) + std::norm(s->v3[i]) +
                             std::norm(s->b2[i]);
            total += e;
            if (i >= cut) out += e;
        }
    }
    if (outer) *outer = out;
    return total;
}

struct LineFit {
    double slope;
    double intercept;
};

LineFit least_squares(const std::vector<double>& t, const std::vector<double>& v) {
    const size_t n = t.size();
    double st = 0.0, sv = 0.0, stt = 0.0, stv = 0.0;
    for (size_t i = 0; i < n; ++i) {
        st += t[i];
        sv += v[i];
        stt += t[i] * t[i];
        stv += t[i] * v[i];
    }
    const double det = n * stt - st * st;
    if (det == 0.0) return {0.0, 0.0};
    return {(n * stv - st * sv) / det, (stt * sv - st * stv) / det};
}

}  // namespace

ModeState make_mode_state(double eta, double length, int n_per_side) {
    if (n_per_side < 16) throw std::invalid_argument("make_mode_state: grid too coarse");
    ModeState y;
    y.eta = eta;
    y.n = n_per_side;
    y.length = length;
    y.dx = length / n_per_side;
    resize_like(y.up, n_per_side);
    resize_like(y.dn, n_per_side);
    return y;
}

void seed_state(ModeState& y, const MediumParams& params, double amplitude, double center,
                double width) {
    if (amplitude == 0.0) return;
    const Complex amp = amplitude * std::exp(kI * 0.6);
    const double cb = params.c_b;
    for (int i = 0; i <= y.n; ++i) {
        const double x = i * y.dx;
        const double bump = std::exp(-0.5 * std::pow((x - center) / width, 2));
        const Complex u = amp * bump;     // left-moving: r+ = 0
        y.up.h[i] = u / (cb * cb);
        y.up.b2[i] = params.b2 * y.up.h[i];
        y.up.v3[i] = -u / cb;
    }
    y.f = 0.05 * amplitude * Complex(0.8, 0.6);
    enforce(y, params);
}

double max_stable_dt(const ModeState& y, const MediumParams& params, double cfl) {
    return cfl * y.dx / (params.c_b + std::abs(params.v_plus));
}

void step(ModeState& y, double dt, const MediumParams& params, double filter_strength) {
    const double hard_cap = 0.66 * y.dx / (params.c_b + std::abs(params.v_plus));
    if (dt > hard_cap) {
        throw step_size_error("step: dt exceeds the CFL bound for this grid");
    }
    static thread_local Deriv k1, k2, k3, k4;
    static thread_local ModeState stage;
    static thread_local std::vector<Complex> su, sdu, sdv;
    for (Deriv* d : {&k1, &k2, &k3, &k4}) {
        if (d->up.h.size() != y.up.h.size()) {
            resize_like(d->up, y.n);
            resize_like(d->dn, y.n);
        }
    }
    if (stage.up.h.size() != y.up.h.size()) {
        stage = y;
    }
    stage.eta = y.eta;
    stage.n = y.n;
    stage.dx = y.dx;

    compute_rhs(y, params, k1, su, sdu, sdv);
    axpy_fields(stage.up, y.up, 0.5 * dt, k1.up);
    axpy_fields(stage.dn, y.dn, 0.5 * dt, k1.dn);
    stage.f = y.f + 0.5 * dt * k1.f;
    enforce(stage, params);
    compute_rhs(stage, params, k2, su, sdu, sdv);

    axpy_fields(stage.up, y.up, 0.5 * dt, k2.up);
    axpy_fields(stage.dn, y.dn, 0.5 * dt, k2.dn);
    stage.f = y.f + 0.5 * dt * k2.f;
    enforce(stage, params);
    compute_rhs(stage, params, k3, su, sdu, sdv);

    axpy_fields(stage.up, y.up, dt, k3.up);
    axpy_fields(stage.dn, y.dn, dt, k3.dn);
    stage.f = y.f + dt * k3.f;
    enforce(stage, params);
    compute_rhs(stage, params, k4, su, sdu, sdv);

    combine_rk4(y.up, y.up, dt, k1.up, k2.up, k3.up, k4.up);
    combine_rk4(y.dn, y.dn, dt, k1.dn, k2.dn, k3.dn, k4.dn);
    y.f += dt / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
    y.t += dt;

    y.last_interface_residual = interface_defect(y, params);
    enforce(y, params);
    filter_state(y, filter_strength);
}

GrowthReport run_mode(double eta, const MediumParams& params, double t_final,
                      double seed_amplitude, const SimOptions& options) {
    if (eta == 0.0) throw std::invalid_argument("run_mode: eta must be nonzero");
    const double support = options.bump_center + 6.0 * options.bump_width;
    const double length = options.domain_length > 0.0
                              ? options.domain_length
                              : (params.c_b + params.v_plus) * t_final + support;
    ModeState y = make_mode_state(eta, length, options.n_per_side);
    seed_state(y, params, seed_amplitude, options.bump_center, options.bump_width);

    GrowthReport report;
    report.eta = eta;
    const NeutralRoots roots = neutral_roots(params);
    report.predicted = roots.x1_sq < 0.0 ? Complex(eta * std::sqrt(-roots.x1_sq), 0.0)
                                         : Complex(0.0, eta * std::sqrt(roots.x1_sq));

    const int n_samples = std::max(options.n_samples, 64);
    const double t_sample = t_final / n_samples;
    const double dt_max = max_stable_dt(y, params, options.cfl);
    const int steps_per_sample = std::max(1, static_cast<int>(std::ceil(t_sample / dt_max)));
    const double dt = t_sample / steps_per_sample;

    std::vector<double> ts;
    std::vector<Complex> fs;
    ts.reserve(n_samples + 1);
    fs.reserve(n_samples + 1);
    ts.push_back(0.0);
    fs.push_back(y.f);
    if (options.collect_trajectory) report.trajectory.push_back({0.0, y.f, 0.0});

    for (int s = 1; s <= n_samples; ++s) {
        for (int k = 0; k < steps_per_sample; ++k) step(y, dt, params, options.filter_strength);
        ts.push_back(y.t);
        fs.push_back(y.f);
        double outer = 0.0;
        const double total = state_energy(y, 0.10, &outer);
        const double ratio = total > 0.0 ? outer / total : 0.0;
        report.max_outer_energy_ratio = std::max(report.max_outer_energy_ratio, ratio);
        if (ratio > 1e-6) {
            throw invalid_run_error(
                "run_mode: outer 10% of the domain carries energy ratio " +
                std::to_string(ratio) + " at t = " + std::to_string(y.t) +
                "; domain too small for this t_final");
        }
        if (options.collect_trajectory) {
            report.trajectory.push_back({y.t, y.f, y.last_interface_residual});
        }
    }
    report.valid = true;

    // Fit over the last half of the run.  A first raw pass captures genuine
    // exponential growth; if none is present the window mean is removed and
    // the fit repeated -- on a truncated domain the radiative closure
    // supports a quasi-steady front offset, and the neutral ringing is the
    // part that moves around it.
    auto fit_rate = [&](Complex baseline, Complex* rate) {
        double peak = 0.0;
        for (size_t i = ts.size() / 2; i < ts.size(); ++i)
            peak = std::max(peak, std::abs(fs[i] - baseline));
        if (peak < 1e-280) return false;
        std::vector<double> t_fit, logabs, phase;
        double prev_arg = 0.0, offset = 0.0;
        bool first = true;
        const double pi = std::acos(-1.0);
        for (size_t i = ts.size() / 2; i < ts.size(); ++i) {
            const double a = std::abs(fs[i] - baseline);
            if (a < 1e-2 * peak) continue;  // beat nulls poison the log fit
            const double arg = std::arg(fs[i] - baseline);
            if (!first) {
                double d = arg - prev_arg;
                while (d > pi) d -= 2.0 * pi;
                while (d < -pi) d += 2.0 * pi;
                offset += d;
            }
            first = false;
            prev_arg = arg;
            t_fit.push_back(ts[i]);
            logabs.push_back(std::log(a));
            phase.push_back(offset);
        }
        if (t_fit.size() < 8) return false;
        *rate = Complex(least_squares(t_fit, logabs).slope, least_squares(t_fit, phase).slope);
        return true;
    };

    Complex rate{};
    if (seed_amplitude == 0.0 || !fit_rate(Complex{}, &rate)) {
        report.null_run = true;
        return report;
    }
    if (std::abs(rate.real()) * (t_final / 2.0) < 2.0) {
        Complex mean{};
        for (size_t i = ts.size() / 2; i < ts.size(); ++i) mean += fs[i];
        mean /= static_cast<double>(ts.size() - ts.size() / 2);
        Complex ringing{};
        if (fit_rate(mean, &ringing)) rate = ringing;
    }
    report.lambda = rate;

    if (roots.x1_sq < 0.0) {
        const double target = report.predicted.real();
        report.rel_error = std::abs(report.lambda.real() - target) / target;
    } else {
        const double target = report.predicted.imag();
        report.rel_error =
            target != 0.0 ? std::abs(std::abs(report.lambda.imag()) - target) / target : 0.0;
    }
    return report;
}

std::vector<ThresholdRow> scan_threshold(double c, double rho, double b2, double eta,
                                         const std::vector<double>& v_list, double t_final,
                                         const SimOptions& options) {
    std::vector<ThresholdRow> rows;
    rows.reserve(v_list.size());
    for (const double v : v_list) {
        const MediumParams params = derive_params(v, c, rho, b2);
        const GrowthReport report = run_mode(eta, params, t_final, 1e-2, options);
        const double noise_floor = 0.02 * std::abs(eta) * params.c_b;
        rows.push_back({v, report.lambda.real(), report.lambda.real() > noise_floor});
    }
    return rows;
}

}  // namespace cvsheet
