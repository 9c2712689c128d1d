// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvsheet/boundary.hpp"
#include "cvsheet/front.hpp"
#include "cvsheet/medium.hpp"
#include "cvsheet/roots.hpp"
#include "cvsheet/simulator.hpp"
#include "cvsheet/symbol.hpp"
#include "oracles.hpp"

using namespace cvsheet;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& detail, const std::string& msg) {
    if (!ok && detail.empty()) detail = msg;
    return ok;
}

double rel(Complex a, Complex b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

MediumParams draw_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double c = 0.3 + 2.2 * u(rng);
    const double rho = 0.2 + 2.8 * u(rng);
    const double b2 = -1.5 + 3.0 * u(rng);
    const double v = 0.2 + 2.8 * u(rng);
    return derive_params(v, c, rho, b2);
}

MediumParams draw_stable(std::mt19937_64& rng, double b2_override, bool use_override) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double c = 0.3 + 2.2 * u(rng);
    const double rho = 0.2 + 2.8 * u(rng);
    const double b2 = use_override ? b2_override : -1.5 + 3.0 * u(rng);
    const double cb = std::sqrt(c * c + b2 * b2 / rho);
    const double v = std::sqrt(2.0) * cb * (1.02 + 1.5 * u(rng));
    return derive_params(v, c, rho, b2);
}

// ---- criterion bodies, parameterized on the field amplitude so the
// ---- zero-field reduction can re-run them verbatim with b2 = 0.

bool crit_threshold(std::string& detail, bool zero_field) {
    std::mt19937_64 rng(zero_field ? 101 : 100);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double c = 0.3 + 2.2 * u(rng);
        const double rho = 0.2 + 2.8 * u(rng);
        const double b2 = zero_field ? 0.0 : -1.5 + 3.0 * u(rng);
        const double expected = std::sqrt(2.0) * std::sqrt(c * c + b2 * b2 / rho);
        const double got = critical_velocity(c, rho, b2);
        if (!check(std::abs(got - expected) <= 1e-9, detail,
                   "draw " + std::to_string(i) + ": v_crit off by " +
                       std::to_string(got - expected)))
            return false;
    }
    return true;
}

bool crit_quartic(std::string& detail, bool zero_field) {
    std::mt19937_64 rng(zero_field ? 201 : 200);
    for (int i = 0; i < 500; ++i) {
        MediumParams p = draw_params(rng);
        if (zero_field) p = derive_params(p.v_plus, p.c, p.rho, 0.0);
        const NeutralRoots r = neutral_roots(p);
        const double v2 = p.v_plus * p.v_plus;
        const double cb2 = p.c_b * p.c_b;
        const auto roots = oracles::polynomial_roots(
            {Complex(v2 * v2 - 2.0 * cb2 * v2, 0.0), Complex(-2.0 * (v2 + cb2), 0.0),
             Complex(1.0, 0.0)});
        double lo = roots[0].real(), hi = roots[1].real();
        if (lo > hi) std::swap(lo, hi);
        const double scale = std::abs(lo) + std::abs(hi);
        if (!check(std::abs(r.x1_sq - lo) <= 1e-10 * scale &&
                       std::abs(r.x2_sq - hi) <= 1e-10 * scale,
                   detail, "closed form disagrees with the generic solver at draw " +
                               std::to_string(i)))
            return false;
    }
    return true;
}

bool crit_acceptance(std::string& detail, bool zero_field) {
    // v = 2, c_b = 1 in both variants of the medium
    const MediumParams p = zero_field ? derive_params(2.0, 1.0, 1.0, 0.0)
                                      : derive_params(2.0, 0.8, 1.0, 0.6);
    const NeutralRoots r = neutral_roots(p);
    const double x1 = std::sqrt(r.x1_sq);
    const double x2 = std::sqrt(r.x2_sq);
    for (const double eta : {1.0, -1.0}) {
        for (const double sign : {1.0, -1.0}) {
            const Frequency freq{0.0, sign * x1 * eta, eta};
            const Complex prod = mu(Side::plus, freq, p) * mu(Side::minus, freq, p);
            if (!check(std::abs(prod - eta * eta) <= 1e-10, detail,
                       "X1 candidate violates mu+ mu- = eta^2"))
                return false;
        }
        const Complex ieta{0.0, eta};
        const Frequency freq2{0.0, x2 * eta, eta};
        const Complex tilde =
            (mu(Side::plus, freq2, p) / ieta) * (mu(Side::minus, freq2, p) / ieta);
        if (!check(std::abs(tilde + 1.0) > 1.0, detail, "X2 not rejected")) return false;
    }
    return check(r.x1_accepted && !r.x2_accepted, detail, "acceptance flags wrong");
}

bool crit_simplicity(std::string& detail, bool zero_field) {
    std::mt19937_64 rng(zero_field ? 301 : 300);
    for (int i = 0; i < 100; ++i) {
        const MediumParams p = draw_stable(rng, 0.0, zero_field);
        const Complex ds = simplicity_derivative(p);
        if (!check(std::abs(ds) > 1e-6, detail, "simplicity derivative too small")) return false;
        const double x1 = std::sqrt(neutral_roots(p).x1_sq);
        const Complex ieta{0.0, 1.0};
        auto prod = [&](double x) {
            const Frequency f{0.0, x, 1.0};
            return (mu(Side::plus, f, p) / ieta) * (mu(Side::minus, f, p) / ieta);
        };
        const Complex fd = oracles::central_difference(prod, x1, 1e-6);
        if (!check(std::abs(ds - fd) <= 1e-6 * std::abs(fd), detail,
                   "derivative disagrees with finite differences at draw " + std::to_string(i)))
            return false;
    }
    return true;
}

bool crit_symbol(std::string& detail, bool zero_field) {
    const MediumParams stable = zero_field ? derive_params(2.0, 1.0, 1.0, 0.0)
                                           : derive_params(2.0, 0.8, 1.0, 0.6);
    const MediumParams sonic = zero_field ? derive_params(1.0, 1.0, 1.0, 0.0)
                                          : derive_params(1.0, 0.8, 1.0, 0.6);
    std::mt19937_64 rng(zero_field ? 401 : 400);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> ug(1e-3, 3.0);
    std::uniform_real_distribution<double> uk(0.01, 100.0);
    for (int i = 0; i < 10000; ++i) {
        const Frequency f{ug(rng), u(rng), u(rng)};
        if (!check(rel(sigma_form1(f, stable), sigma(f, stable).sigma) <= 1e-12, detail,
                   "forms disagree"))
            return false;
        const double k = uk(rng);
        const Frequency fk = f.scaled(k);
        if (!check(rel(mu(Side::plus, fk, stable), k * mu(Side::plus, f, stable)) <= 1e-12 &&
                       rel(mu(Side::minus, fk, stable), k * mu(Side::minus, f, stable)) <= 1e-12,
                   detail, "mu homogeneity"))
            return false;
        if (!check(rel(sigma(fk, stable).sigma, k * k * sigma(f, stable).sigma) <= 1e-12, detail,
                   "sigma homogeneity"))
            return false;
    }
    // Boundary limits at tau = 0 via gamma = 1e-8 probes.
    for (const double eta : {1.0, -1.0, 0.5}) {
        const double super = (stable.v_plus * stable.v_plus - 2.0 * stable.c_b * stable.c_b) *
                             eta * eta;
        const Complex probe = sigma({1e-8, 0.0, eta}, stable).sigma;
        if (!check(std::abs(probe - super) <= 1e-6, detail, "supersonic tau=0 limit")) return false;
        const double sval = -sonic.c_b * sonic.c_b * eta * eta;
        const Complex probe2 = sigma({1e-8, 0.0, eta}, sonic).sigma;
        if (!check(std::abs(probe2 - sval) <= 1e-6, detail, "sonic tau=0 limit")) return false;
    }
    return true;
}

bool crit_trace(std::string& detail, bool zero_field) {
    std::mt19937_64 rng(zero_field ? 501 : 500);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> ug(1.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        MediumParams p = draw_params(rng);
        if (zero_field) p = derive_params(p.v_plus, p.c, p.rho, 0.0);
        const Frequency freq{ug(rng), 3.0 * u(rng), u(rng)};
        const TraceData t = solve_jump_system(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                                              Complex(u(rng), u(rng)), freq, p);
        if (!check(trace_identity(t, freq, p) <= 1e-12, detail,
                   "trace identity residual above 1e-12 at draw " + std::to_string(i)))
            return false;
    }
    return true;
}

bool crit_profile(std::string& detail, bool zero_field) {
    const MediumParams p = zero_field ? derive_params(1.9, 1.1, 0.9, 0.0)
                                      : derive_params(1.7, 1.1, 0.9, 0.5);
    const Frequency freq{1.5, 0.4, 0.8};
    const ProfileFn k = [](double y) { return Complex(std::exp(-y), 0.0); };
    const WResult w = compute_W(k, k, freq, p, 16.0, 32);
    const TraceData t = solve_jump_system(Complex(0.4, 0.2), w.i_plus, w.i_minus, freq, p);
    for (const Side side : {Side::plus, Side::minus}) {
        double previous = 0.0, order = 0.0;
        for (const int n : {60, 120, 240}) {
            const InteriorProfile prof = reconstruct_profile(t, k, side, freq, p, 4.0, n, 16.0);
            if (previous > 0.0) order = std::log2(previous / prof.ode_residual);
            previous = prof.ode_residual;
        }
        std::ostringstream os;
        os << "observed order " << order;
        if (!check(order >= 1.9, detail, os.str())) return false;
    }
    return true;
}

bool crit_front(std::string& detail, bool zero_field) {
    const MediumParams p = zero_field ? derive_params(2.0, 1.0, 1.0, 0.0)
                                      : derive_params(2.0, 0.8, 1.0, 0.6);
    const SpectralGrid g = make_spectral_grid(16.0, 16.0, 128, 64, 1.0);
    // uniqueness: zero forcing gives the zero front
    const FrontSolution zero = solve_front(make_zero_forcing(g), 0.0, 1.0, p);
    for (const double v : zero.f_weighted) {
        if (!check(v == 0.0, detail, "zero forcing gave a nonzero front")) return false;
    }
    // manufactured lattice solution recovered through the divide path
    std::vector<double> f_star(g.size());
    for (int it = 0; it < g.n_t; ++it) {
        for (int ix = 0; ix < g.n_x; ++ix) {
            const double t = g.t(it) - 6.0, x = g.x(ix) - 8.0;
            f_star[g.idx(it, ix)] = std::exp(-0.5 * (t * t + x * x)) * (1.0 + 0.3 * x);
        }
    }
    const std::vector<Complex> f_hat_star = forward_hat(g, f_star, 0.0);
    std::vector<Complex> g_hat(g.size());
    for (int jt = 0; jt < g.n_t; ++jt) {
        for (int jx = 0; jx < g.n_x; ++jx) {
            const Frequency freq{1.0, g.delta(jt), g.eta(jx)};
            g_hat[g.idx(jt, jx)] = sigma(freq, p).sigma * f_hat_star[g.idx(jt, jx)];
        }
    }
    const FrontSolution sol = solve_front_hat(g, g_hat, 0.0, 1.0, p);
    double worst = 0.0, scale = 0.0;
    for (size_t i = 0; i < sol.f_hat.size(); ++i) {
        worst = std::max(worst, std::abs(sol.f_hat[i] - f_hat_star[i]));
        scale = std::max(scale, std::abs(f_hat_star[i]));
    }
    std::ostringstream os;
    os << "round-trip error " << worst / scale;
    return check(worst <= 1e-12 * scale, detail, os.str());
}

bool crit_estimate(std::string& detail, bool zero_field) {
    const MediumParams p = zero_field ? derive_params(2.0, 1.0, 1.0, 0.0)
                                      : derive_params(2.0, 0.8, 1.0, 0.6);
    const ForcingField forcing = make_gaussian_forcing(default_estimate_grid(), p);
    if (!check(forcing.windowing_residual <= 1e-8, detail, "windowing residual above 1e-8"))
        return false;
    for (const double s : {0.0, 1.0}) {
        const auto rows = estimate_report(forcing, s, {1.0, 2.0, 4.0, 8.0}, p);
        double lo = 1e300, hi = 0.0;
        for (const EstimateRow& r : rows) {
            if (!check(!r.null_row && r.ratio > 0.0, detail, "unexpected null row")) return false;
            lo = std::min(lo, r.ratio);
            hi = std::max(hi, r.ratio);
        }
        std::ostringstream os;
        os << "s=" << s << " max/min=" << hi / lo;
        if (!check(hi / lo <= 1.5, detail, os.str())) return false;
    }
    return true;
}

bool crit_simulator(std::string& detail, bool zero_field) {
    SimOptions opt;
    opt.n_per_side = zero_field ? 1024 : 2048;
    const double scan_n = zero_field ? 1024 : 2048;
    const double c = zero_field ? 1.0 : 0.8;
    const double b2 = zero_field ? 0.0 : 0.6;

    // unstable calibration: M_B = 1, eta = 1
    {
        const MediumParams p = derive_params(1.0, c, 1.0, b2);
        const GrowthReport r = run_mode(1.0, p, 40.0, 1e-2, opt);
        const double target = std::sqrt(std::sqrt(5.0) - 2.0);  // 0.485868...
        std::ostringstream os;
        os << "unstable rate " << r.lambda.real() << " vs " << target;
        if (!check(std::abs(r.lambda.real() - target) <= 0.02 * target, detail, os.str()))
            return false;
    }
    // stable calibration: M_B = 2, eta = 1
    {
        const MediumParams p = derive_params(2.0, c, 1.0, b2);
        const GrowthReport r = run_mode(1.0, p, 60.0, 1e-2, opt);
        const double target = std::sqrt(5.0 - std::sqrt(17.0));  // 0.936426...
        std::ostringstream os;
        os << "stable osc " << std::abs(r.lambda.imag()) << " vs " << target << ", re "
           << r.lambda.real();
        if (!check(std::abs(std::abs(r.lambda.imag()) - target) <= 0.02 * target, detail,
                   os.str()))
            return false;
        if (!check(r.lambda.real() <= 0.02 * p.c_b, detail, os.str())) return false;
    }
    // threshold scan brackets sqrt(2) c_b
    {
        SimOptions scan_opt;
        scan_opt.n_per_side = static_cast<int>(scan_n);
        const auto rows = scan_threshold(c, 1.0, b2, 1.0, {1.2, 1.3, 1.4, 1.5}, 60.0, scan_opt);
        const double v_crit = std::sqrt(2.0);  // c_b = 1 in both variants
        double last_growing = 0.0, first_calm = 1e300;
        for (const auto& r : rows) {
            if (r.growing) last_growing = std::max(last_growing, r.v);
            else first_calm = std::min(first_calm, r.v);
        }
        std::ostringstream os;
        os << "bracket (" << last_growing << ", " << first_calm << ")";
        if (!check(last_growing < v_crit && v_crit < first_calm, detail, os.str())) return false;
        // growth decreasing toward the threshold
        if (!check(rows[0].re_lambda > rows[1].re_lambda &&
                       rows[1].re_lambda > rows[2].re_lambda,
                   detail, "growth not decreasing toward the threshold"))
            return false;
    }
    return true;
}

int run_all(const std::vector<Criterion>& criteria) {
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), secs, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"critical velocity matches sqrt(2) c_b (100 draws, 1e-9)",
         [](std::string& d) { return crit_threshold(d, false); }},
        {"closed-form quartic roots vs generic solver (500 draws, 1e-10)",
         [](std::string& d) { return crit_quartic(d, false); }},
        {"neutral candidates: X1 accepted, X2 rejected (v=2, c_b=1)",
         [](std::string& d) { return crit_acceptance(d, false); }},
        {"simple neutral roots: derivative vs finite differences (100 draws)",
         [](std::string& d) { return crit_simplicity(d, false); }},
        {"symbol forms, homogeneity and tau=0 limits (1e4 points)",
         [](std::string& d) { return crit_symbol(d, false); }},
        {"trace identity to 1e-12 (1000 draws, gamma >= 1)",
         [](std::string& d) { return crit_trace(d, false); }},
        {"interior ODE residual converges at order >= 1.9",
         [](std::string& d) { return crit_profile(d, false); }},
        {"front solver round trip to 1e-12; zero forcing gives zero front",
         [](std::string& d) { return crit_front(d, false); }},
        {"estimate ratio gamma-uniform within 1.5x (s = 0 and 1)",
         [](std::string& d) { return crit_estimate(d, false); }},
        {"simulator vs symbol: rates within 2%, threshold bracketed",
         [](std::string& d) { return crit_simulator(d, false); }},
        {"zero-field reduction reproduces the Euler threshold sqrt(2) c",
         [](std::string& d) {
             return crit_threshold(d, true) && crit_quartic(d, true) &&
                    crit_acceptance(d, true) && crit_simplicity(d, true) &&
                    crit_symbol(d, true) && crit_trace(d, true) && crit_profile(d, true) &&
                    crit_front(d, true) && crit_estimate(d, true) && crit_simulator(d, true);
         }},
    };
    const int failures = run_all(criteria);
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
