#include "cvsheet/roots.hpp"

#include <algorithm>
#include <cmath>

#include "cvsheet/errors.hpp"

namespace cvsheet {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex mu_tilde_product(Complex x, const MediumParams& params, double eta) {
    Complex tau = kI * x * eta;
    if (tau.real() < 0.0) {  // use the partner -X, same quartic root
        x = -x;
        tau = -tau;
    }
    double g = tau.real();
    if (std::abs(g) < 1e-14 * std::abs(tau)) g = 0.0;  // land exactly on the boundary path
    const Frequency freq{g, tau.imag(), eta};
    const Complex mp = mu(Side::plus, freq, params);
    const Complex mm = mu(Side::minus, freq, params);
    const Complex ieta{0.0, eta};
    return (mp / ieta) * (mm / ieta);
}

}  // namespace

bool verify_acceptance(Complex x_candidate, const MediumParams& params, double eta, double tol) {
    const Complex prod = mu_tilde_product(x_candidate, params, eta);
    return std::abs(prod + 1.0) <= tol;
}

NeutralRoots neutral_roots(const MediumParams& params) {
    const double v2 = params.v_plus * params.v_plus;
    const double cb2 = params.c_b * params.c_b;
    const double disc = std::sqrt(cb2 * cb2 + 4.0 * cb2 * v2);

    NeutralRoots out{};
    out.x1_sq = v2 + cb2 - disc;
    out.x2_sq = v2 + cb2 + disc;

    const double scale = v2 + cb2;
    if (std::abs(out.x1_sq) > 1e-12 * scale) {
        const Complex x1 = out.x1_sq > 0.0 ? Complex(std::sqrt(out.x1_sq), 0.0)
                                           : Complex(0.0, -std::sqrt(-out.x1_sq));
        out.x1_accepted = verify_acceptance(x1, params);
    } else {
        out.x1_accepted = false;  // critical point: degenerate double root
    }
    out.x2_accepted = verify_acceptance(Complex(std::sqrt(out.x2_sq), 0.0), params);

    if (classify_regime(params).tag == Regime::stable) {
        out.simplicity = simplicity_derivative(params);
    }
    return out;
}

Complex simplicity_derivative(const MediumParams& params) {
    if (classify_regime(params).tag != Regime::stable) {
        throw regime_error("simplicity_derivative: requires mach > sqrt(2)");
    }
    const double v2 = params.v_plus * params.v_plus;
    const double cb2 = params.c_b * params.c_b;
    const double x1_sq = v2 + cb2 - std::sqrt(cb2 * cb2 + 4.0 * cb2 * v2);
    const double x1 = std::sqrt(x1_sq);
    const Complex prod = mu_tilde_product(Complex(x1, 0.0), params, 1.0);
    return 2.0 * x1 * (x1_sq - v2 - cb2) / (prod * cb2 * cb2);
}

double critical_velocity(double c, double rho, double b2) {
    const MediumParams probe = derive_params(1.0, c, rho, b2);
    const double cb = probe.c_b;
    auto x1_sq_at = [&](double v) {
        const double v2 = v * v;
        const double cb2 = cb * cb;
        return v2 + cb2 - std::sqrt(cb2 * cb2 + 4.0 * cb2 * v2);
    };
    double lo = 1e-3 * cb;   // x1_sq < 0 (unstable side)
    double hi = 10.0 * cb;   // x1_sq > 0 (stable side)
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * cb; ++it) {
        const double mid = 0.5 * (lo + hi);
        (x1_sq_at(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

double abs_sigma(const Frequency& f, const MediumParams& params) {
    return std::abs(sigma(f, params).sigma);
}

// Gauss-Newton step for |Sigma|^2 restricted to the boundary gamma = 0,
// with eta fixed.  Sigma there is a complex function of the real variable
// delta; its zeros along the line are simple.
double polish_on_boundary(double delta, double eta, const MediumParams& params) {
    for (int it = 0; it < 60; ++it) {
        const Frequency f{0.0, delta, eta};
        const Complex s = sigma(f, params).sigma;
        if (std::abs(s) < 1e-13) break;
        const double h = 1e-7 * (1.0 + std::abs(delta));
        const Complex sp = sigma(Frequency{0.0, delta + h, eta}, params).sigma;
        const Complex sm = sigma(Frequency{0.0, delta - h, eta}, params).sigma;
        const Complex ds = (sp - sm) / (2.0 * h);
        const double d2 = std::norm(ds);
        if (d2 == 0.0) break;
        double step = -(std::conj(ds) * s).real() / d2;
        double next = delta + step;
        int halvings = 0;
        while (halvings < 30 &&
               std::abs(sigma(Frequency{0.0, next, eta}, params).sigma) > std::abs(s)) {
            step *= 0.5;
            next = delta + step;
            ++halvings;
        }
        if (next == delta) break;
        delta = next;
    }
    return delta;
}

// Damped Newton in tau on the chart eta = +-1.  Iterates are clamped to the
// closed half plane; once they collapse onto gamma = 0 the boundary polish
// takes over.
Frequency refine_zero(Frequency seed, const MediumParams& params) {
    const double eta = seed.eta;
    Complex tau = seed.tau();
    for (int it = 0; it < 80; ++it) {
        Frequency f{std::max(tau.real(), 0.0), tau.imag(), eta};
        const Complex s = sigma(f, params).sigma;
        if (std::abs(s) < 1e-13) break;
        const double h = 1e-7 * (1.0 + std::abs(tau));
        // centered difference in the real direction of tau; Sigma is analytic
        // in the interior so one direction determines the derivative
        Frequency fp{f.gamma + h, f.delta, eta};
        Frequency fm{std::max(f.gamma - h, 0.0), f.delta, eta};
        const Complex ds = (sigma(fp, params).sigma - sigma(fm, params).sigma) /
                           Complex(fp.gamma - fm.gamma, 0.0);
        if (std::abs(ds) == 0.0) break;
        Complex step = -s / ds;
        Complex next = tau + step;
        int halvings = 0;
        while (halvings < 30) {
            Frequency fn{std::max(next.real(), 0.0), next.imag(), eta};
            if (abs_sigma(fn, params) <= std::abs(s)) break;
            step *= 0.5;
            next = tau + step;
            ++halvings;
        }
        tau = next;
        if (tau.real() < 1e-12) {
            const double delta = polish_on_boundary(tau.imag(), eta, params);
            return Frequency{0.0, delta, eta};
        }
    }
    return Frequency{std::max(tau.real(), 0.0), tau.imag(), eta};
}

}  // namespace

std::vector<HemisphereZero> find_hemisphere_zeros(const MediumParams& params, double gamma_floor,
                                                  int grid_density) {
    grid_density = std::max(grid_density, 64);
    const RegimeVerdict verdict = classify_regime(params);
    std::vector<HemisphereZero> zeros;
    if (verdict.tag == Regime::critical) return zeros;

    const double pi = std::acos(-1.0);

    // Coarse scan of |Sigma| over the hemisphere; the smallest values seed
    // the Newton refinement.
    struct Seed {
        Frequency f;
        double r;
    };
    std::vector<Seed> seeds;
    seeds.reserve(static_cast<size_t>(grid_density) * 2 * grid_density);
    const int na = grid_density;
    const int nb = 2 * grid_density;
    for (int ia = 1; ia <= na; ++ia) {  // skip the pole gamma = 1 (Sigma = tau^2 != 0)
        const double alpha = (pi / 2.0) * ia / na;
        const double g = std::cos(alpha);
        const double r = std::sin(alpha);
        for (int ib = 0; ib < nb; ++ib) {
            const double beta = 2.0 * pi * ib / nb;
            Frequency f{g, r * std::cos(beta), r * std::sin(beta)};
            seeds.push_back({f, abs_sigma(f, params)});
        }
    }
    const size_t keep = std::min<size_t>(64, seeds.size());
    std::partial_sort(seeds.begin(), seeds.begin() + keep, seeds.end(),
                      [](const Seed& a, const Seed& b) { return a.r < b.r; });
    seeds.resize(keep);

    for (const Seed& seed : seeds) {
        if (std::abs(seed.f.eta) < 1e-3) continue;  // Sigma(tau, 0) = tau^2 has no zeros on Xi
        const double sgn = seed.f.eta > 0.0 ? 1.0 : -1.0;
        const double scale = 1.0 / std::abs(seed.f.eta);
        Frequency chart{seed.f.gamma * scale, seed.f.delta * scale, sgn};
        Frequency z = refine_zero(chart, params);
        const double res_chart = abs_sigma(z, params);
        if (res_chart / z.lambda2() > 1e-10) continue;
        Frequency unit = z.normalized();
        if (unit.gamma < 1e-9) unit.gamma = 0.0;
        const bool dup = std::any_of(zeros.begin(), zeros.end(), [&](const HemisphereZero& hz) {
            return std::abs(hz.freq.gamma - unit.gamma) + std::abs(hz.freq.delta - unit.delta) +
                       std::abs(hz.freq.eta - unit.eta) <
                   1e-6;
        });
        if (dup) continue;
        zeros.push_back(HemisphereZero{unit, abs_sigma(unit, params),
                                       unit.gamma > 1e-8 ? ZeroType::unstable_real_part
                                                         : ZeroType::neutral_imaginary});
    }

    if (verdict.tag == Regime::unstable) {
        const bool has_growing = std::any_of(zeros.begin(), zeros.end(), [&](const HemisphereZero& z) {
            return z.type == ZeroType::unstable_real_part && z.freq.gamma >= gamma_floor;
        });
        if (!has_growing) {
            throw search_inconsistency_error(
                "find_hemisphere_zeros: unstable regime (X1^2 < 0) but no growing mode located");
        }
    }
    return zeros;
}

}  // namespace cvsheet
