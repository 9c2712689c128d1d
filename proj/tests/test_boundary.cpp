#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cvsheet/boundary.hpp"
#include "cvsheet/errors.hpp"
#include "cvsheet/medium.hpp"

using namespace cvsheet;
using doctest::Approx;

namespace {

const MediumParams kStable = derive_params(2.0, 0.8, 1.0, 0.6);  // c_b = 1
const MediumParams kGeneric = derive_params(1.7, 1.1, 0.9, 0.5);

const ProfileFn kZeroFn = [](double) { return Complex{}; };

double rel(Complex a, Complex b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace

TEST_CASE("W of zero forcing is zero") {
    const WResult w = compute_W(kZeroFn, kZeroFn, {1.5, 0.3, 0.8}, kStable);
    CHECK(w.w == Complex{});
    CHECK_FALSE(w.tail_warning);
}

TEST_CASE("W of exponential forcing matches the closed form") {
    const Frequency freq{1.5, 0.3, 0.8};
    const double a = 1.3;
    const ProfileFn kp = [a](double y) { return Complex(std::exp(-a * y), 0.0); };
    const WResult w = compute_W(kp, kZeroFn, freq, kGeneric, 14.0, 28);
    const Complex mp = mu(Side::plus, freq, kGeneric);
    const double cb2 = kGeneric.c_b * kGeneric.c_b;
    const Complex expected = 1.0 / (mp * cb2 * (mp + a));
    CHECK(rel(w.w, expected) < 1e-10);
    CHECK(rel(w.i_plus, 1.0 / (mp + a)) < 1e-10);
}

TEST_CASE("equal forcing with zero shear velocity cancels in W") {
    // mu+ = mu- when the background velocity vanishes
    MediumParams rest{};
    rest.v_plus = 0.0;
    rest.c = 1.0;
    rest.rho = 1.0;
    rest.b2 = 0.5;
    rest.c_alfven = std::sqrt(0.25);
    rest.c_b = std::sqrt(1.25);
    rest.mach = 0.0;
    const ProfileFn k = [](double y) { return Complex(std::exp(-0.9 * y), 0.0); };
    const WResult w = compute_W(k, k, {1.2, 0.4, 0.7}, rest);
    CHECK(std::abs(w.w) < 1e-12);
    // same cancellation at eta = 0 where the roots coincide (Lemma 4.3)
    const WResult w0 = compute_W(k, k, {1.2, 0.4, 0.0}, kStable);
    CHECK(std::abs(w0.w) < 1e-12);
}

TEST_CASE("W requires gamma >= 1") {
    CHECK_THROWS_AS(compute_W(kZeroFn, kZeroFn, {0.5, 0.0, 1.0}, kStable), std::domain_error);
}

TEST_CASE("tail warning fires on non-decaying forcing") {
    const ProfileFn flat = [](double) { return Complex(1.0, 0.0); };
    const WResult w = compute_W(flat, kZeroFn, {1.5, 0.0, 0.5}, kStable);
    CHECK(w.tail_warning);
}

TEST_CASE("homogeneous jump system has only the zero solution") {
    const TraceData t = solve_jump_system(Complex{}, Complex{}, Complex{}, {1.0, 0.7, 1.3}, kStable);
    CHECK(t.h_plus_0 == Complex{});
    CHECK(t.h_minus_0 == Complex{});
    CHECK(t.dh_plus_0 == Complex{});
    CHECK(t.dh_minus_0 == Complex{});
}

TEST_CASE("front-driven traces satisfy the sum formula") {
    const Frequency freq{1.0, 0.0, 1.0};
    const TraceData t = solve_jump_system(Complex(1.0, 0.0), Complex{}, Complex{}, freq, kStable);
    const Complex mp = mu(Side::plus, freq, kStable);
    const Complex mm = mu(Side::minus, freq, kStable);
    const double cb2 = kStable.c_b * kStable.c_b;
    const Complex expected = -4.0 * Complex(0.0, 1.0) * freq.tau() * freq.eta * kStable.v_plus *
                             (mp - mm) / ((mp + mm) * cb2);
    CHECK(rel(t.dh_plus_0 + t.dh_minus_0, expected) < 1e-12);
    // rows of the jump system hold
    CHECK(rel(t.h_plus_0, t.h_minus_0) < 1e-14);
}

TEST_CASE("trace identity holds to machine precision") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> ug(1.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        const Frequency freq{ug(rng), 3.0 * u(rng), u(rng)};
        const Complex f_hat{u(rng), u(rng)};
        const Complex ip{u(rng), u(rng)};
        const Complex im{u(rng), u(rng)};
        const MediumParams& p = (i % 2 == 0) ? kStable : kGeneric;
        const TraceData t = solve_jump_system(f_hat, ip, im, freq, p);
        CHECK(trace_identity(t, freq, p) <= 1e-12);
    }
}

TEST_CASE("trace identity residual detects a perturbed trace") {
    const Frequency freq{1.3, 0.4, 0.9};
    TraceData t = solve_jump_system(Complex(0.7, -0.2), Complex(0.3, 0.1), Complex(-0.2, 0.5),
                                    freq, kStable);
    CHECK(trace_identity(t, freq, kStable) <= 1e-12);
    t.dh_plus_0 += 1e-6;
    CHECK(trace_identity(t, freq, kStable) > 1e-8);
    // zero traces give residual zero
    const TraceData z{};
    CHECK(trace_identity(z, freq, kStable) == 0.0);
}

TEST_CASE("jump system is degenerate where mu+ + mu- vanishes") {
    // tau = 0, supersonic: mu+ = -mu-
    CHECK_THROWS_AS(solve_jump_system(Complex(1.0, 0.0), Complex{}, Complex{}, {0.0, 0.0, 1.0},
                                      kStable),
                    degenerate_frequency_error);
}

TEST_CASE("traces are linear in the data") {
    const Frequency freq{1.4, -0.6, 1.1};
    const Complex f1(0.3, 0.8), ip1(1.0, -0.5), im1(0.2, 0.4);
    const Complex f2(-1.1, 0.2), ip2(0.5, 0.9), im2(-0.7, 0.1);
    const TraceData a = solve_jump_system(f1, ip1, im1, freq, kGeneric);
    const TraceData b = solve_jump_system(f2, ip2, im2, freq, kGeneric);
    const TraceData s = solve_jump_system(f1 + f2, ip1 + ip2, im1 + im2, freq, kGeneric);
    CHECK(rel(s.h_plus_0, a.h_plus_0 + b.h_plus_0) < 1e-12);
    CHECK(rel(s.dh_plus_0, a.dh_plus_0 + b.dh_plus_0) < 1e-12);
    CHECK(rel(s.dh_minus_0, a.dh_minus_0 + b.dh_minus_0) < 1e-12);
}

TEST_CASE("profile with no forcing is a pure decaying exponential") {
    const Frequency freq{1.2, 0.5, 0.9};
    for (const Side side : {Side::plus, Side::minus}) {
        const Complex m = mu(side, freq, kGeneric);
        const Complex h0{0.8, -0.3};
        TraceData t{};
        t.h_plus_0 = t.h_minus_0 = h0;
        // decay condition: d3h+(0) = -mu+ h0, d3h-(0) = +mu- h0
        t.dh_plus_0 = -mu(Side::plus, freq, kGeneric) * h0;
        t.dh_minus_0 = mu(Side::minus, freq, kGeneric) * h0;
        const InteriorProfile prof =
            reconstruct_profile(t, kZeroFn, side, freq, kGeneric, 6.0, 240);
        CHECK(prof.h.front() == h0);  // interpolation-free endpoint
        CHECK_FALSE(prof.growth_warning);
        CHECK(prof.bounded);
        for (size_t i = 0; i < prof.x3.size(); i += 16) {
            const Complex expected = h0 * std::exp(-m * std::abs(prof.x3[i]));
            CHECK(std::abs(prof.h[i] - expected) < 1e-10);
        }
    }
}

TEST_CASE("zero traces and zero forcing give the zero profile") {
    const TraceData t{};
    const InteriorProfile prof =
        reconstruct_profile(t, kZeroFn, Side::plus, {1.5, 0.0, 1.0}, kStable, 5.0, 100);
    for (const Complex& v : prof.h) CHECK(std::abs(v) == 0.0);
    CHECK(prof.ode_residual == 0.0);
}

TEST_CASE("profile reconstruction converges at second order") {
    const Frequency freq{1.5, 0.4, 0.8};
    const ProfileFn k = [](double y) { return Complex(std::exp(-y), 0.0); };
    const WResult w = compute_W(k, kZeroFn, freq, kGeneric, 16.0, 32);
    const TraceData t =
        solve_jump_system(Complex(0.4, 0.2), w.i_plus, w.i_minus, freq, kGeneric);

    double previous = 0.0;
    double order = 0.0;
    for (const int n : {60, 120, 240}) {
        const InteriorProfile prof =
            reconstruct_profile(t, k, Side::plus, freq, kGeneric, 4.0, n, 16.0);
        if (previous > 0.0) order = std::log2(previous / prof.ode_residual);
        previous = prof.ode_residual;
    }
    CHECK(order >= 1.9);
    CHECK(order <= 2.5);
}

TEST_CASE("violated decay condition raises the growth warning") {
    const Frequency freq{1.2, 0.5, 0.9};
    const Complex h0{1.0, 0.0};
    TraceData t{};
    t.h_plus_0 = t.h_minus_0 = h0;
    t.dh_plus_0 = +mu(Side::plus, freq, kGeneric) * h0;  // growing branch
    t.dh_minus_0 = -mu(Side::minus, freq, kGeneric) * h0;
    const InteriorProfile prof =
        reconstruct_profile(t, kZeroFn, Side::plus, freq, kGeneric, 5.0, 100);
    CHECK(prof.growth_warning);
    CHECK_FALSE(prof.bounded);
    CHECK(std::abs(prof.h.back()) > std::abs(prof.h.front()));
}

TEST_CASE("forced profile keeps the traces and the ODE") {
    const Frequency freq{1.5, -0.3, 1.2};
    const ProfileFn k = [](double y) { return Complex(std::exp(-0.8 * y) * std::cos(y), 0.2 * std::exp(-y)); };
    const WResult w = compute_W(k, k, freq, kStable, 18.0, 36);
    const TraceData t = solve_jump_system(Complex(0.9, 0.4), w.i_plus, w.i_minus, freq, kStable);
    for (const Side side : {Side::plus, Side::minus}) {
        const InteriorProfile prof =
            reconstruct_profile(t, k, side, freq, kStable, 5.0, 400, 18.0);
        const Complex h0 = side == Side::plus ? t.h_plus_0 : t.h_minus_0;
        CHECK(rel(prof.h.front(), h0) < 1e-13);
        CHECK(prof.ode_residual < 5e-4);  // O(dx^2) at dx = 1/80
        CHECK_FALSE(prof.growth_warning);
    }
}
