// Command-line front end: parameter classification, symbol evaluation, root
// finding, trace solves, front solves, estimate tables and time-domain runs.
// CSV for sweeps, JSON for single structured results.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "cvsheet/boundary.hpp"
#include "cvsheet/errors.hpp"
#include "cvsheet/front.hpp"
#include "cvsheet/medium.hpp"
#include "cvsheet/roots.hpp"
#include "cvsheet/simulator.hpp"
#include "cvsheet/symbol.hpp"

using json = nlohmann::json;
using namespace cvsheet;

namespace {

constexpr const char* kVersion = "cvsheet 0.1.0";

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    int jobs = 1;
    uint64_t seed = 0;
    bool verbose = false;
};

struct MediumOpts {
    std::optional<double> v, c, rho, b2;
};

// flags override the JSON config block {"v_plus":..,"c":..,"rho":..,"b2":..}
MediumParams resolve_medium(const GlobalOpts& g, const MediumOpts& m) {
    double v = 1.0, c = 1.0, rho = 1.0, b2 = 0.0;
    bool have_any = false;
    if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in) throw std::invalid_argument("cannot open config " + g.config_path);
        json cfg = json::parse(in);
        if (cfg.contains("v_plus")) v = cfg["v_plus"].get<double>();
        if (cfg.contains("c")) c = cfg["c"].get<double>();
        if (cfg.contains("rho")) rho = cfg["rho"].get<double>();
        if (cfg.contains("b2")) b2 = cfg["b2"].get<double>();
        have_any = true;
    }
    if (m.v) v = *m.v, have_any = true;
    if (m.c) c = *m.c, have_any = true;
    if (m.rho) rho = *m.rho, have_any = true;
    if (m.b2) b2 = *m.b2, have_any = true;
    if (!have_any) throw std::invalid_argument("no medium parameters given (flags or --config)");
    return derive_params(v, c, rho, b2);
}

std::string medium_json_line(const MediumParams& p) {
    std::ostringstream os;
    os << std::setprecision(17) << "{\"v_plus\":" << p.v_plus << ",\"c\":" << p.c
       << ",\"rho\":" << p.rho << ",\"b2\":" << p.b2 << "}";
    return os.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (const char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& header, const std::string& config)
        : config_(config) {
        if (path.empty() || path == "-") {
            out_ = &std::cout;
        } else {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output " + path);
            out_ = &file_;
        }
        *out_ << header << "\n";
    }
    std::ostream& row() { return *out_; }
    ~CsvWriter() {
        *out_ << "# version: " << kVersion << "\n";
        *out_ << "# config: " << config_ << "\n";
        *out_ << "# config-hash: " << std::hex << std::setw(16) << std::setfill('0')
              << fnv1a(config_) << "\n";
        out_->flush();
    }

  private:
    std::ofstream file_;
    std::ostream* out_ = nullptr;
    std::string config_;
};

void emit_json(const GlobalOpts& g, const json& j) {
    if (g.out_path.empty() || g.out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(g.out_path);
        if (!out) throw std::runtime_error("cannot open output " + g.out_path);
        out << j.dump(2) << "\n";
    }
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

// ordered fan-out over an index range
void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty list: " + csv);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear stability laboratory for current-vortex sheets with "
                 "transverse magnetic field"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON file with the medium parameter block");
    app.add_option("--out", g.out_path, "output path (default: stdout)");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps");
    app.add_option("--seed", g.seed, "rng seed for randomized sweeps");
    app.add_flag("--verbose", g.verbose, "chatty progress on stderr");

    MediumOpts med;
    auto add_medium = [&](CLI::App* cmd) {
        cmd->fallthrough();  // global flags remain valid after the subcommand
        cmd->add_option("--v", med.v, "upper-side velocity v1+");
        cmd->add_option("--c", med.c, "sound speed");
        cmd->add_option("--rho", med.rho, "density");
        cmd->add_option("--b2", med.b2, "transverse field amplitude");
    };

    // ---- classify ----
    auto* cmd_classify = app.add_subcommand("classify", "stability regime of the background");
    add_medium(cmd_classify);
    double tol_critical = 1e-12;
    cmd_classify->add_option("--tol", tol_critical, "critical band half-width");
    cmd_classify->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const RegimeVerdict v = classify_regime(p, tol_critical);
        std::printf("%s (M_B=%.3f)\n", to_string(v.tag), p.mach);
        emit_json(g, json{{"regime", to_string(v.tag)},
                          {"mach", p.mach},
                          {"margin", v.margin},
                          {"c_b", p.c_b},
                          {"c_alfven", p.c_alfven}});
    });

    // ---- symbol eval / grid ----
    auto* cmd_symbol = app.add_subcommand("symbol", "front symbol evaluation");
    cmd_symbol->require_subcommand(1);
    double sy_gamma = 1.0, sy_delta = 0.0, sy_eta = 1.0;
    auto* cmd_eval = cmd_symbol->add_subcommand("eval", "evaluate (mu+, mu-, Sigma) at one point");
    add_medium(cmd_eval);
    cmd_eval->add_option("--gamma", sy_gamma, "Re tau")->required();
    cmd_eval->add_option("--delta", sy_delta, "Im tau")->required();
    cmd_eval->add_option("--eta", sy_eta, "wavenumber")->required();
    cmd_eval->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const SymbolEval ev = sigma({sy_gamma, sy_delta, sy_eta}, p);
        emit_json(g, json{{"mu_plus", complex_json(ev.mu_plus)},
                          {"mu_minus", complex_json(ev.mu_minus)},
                          {"sigma", complex_json(ev.sigma)},
                          {"on_boundary", ev.on_boundary}});
    });
    std::string sy_delta_range = "-3:3:121", sy_eta_range = "1:1:1";
    auto* cmd_grid = cmd_symbol->add_subcommand("grid", "CSV of the symbol over a lattice");
    add_medium(cmd_grid);
    cmd_grid->add_option("--gamma", sy_gamma, "Re tau for the slice");
    cmd_grid->add_option("--delta-range", sy_delta_range, "lo:hi:n");
    cmd_grid->add_option("--eta-range", sy_eta_range, "lo:hi:n");
    cmd_grid->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        auto parse_range = [](const std::string& s) {
            double lo, hi;
            int n;
            if (std::sscanf(s.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1)
                throw std::invalid_argument("bad range " + s);
            return std::tuple<double, double, int>{lo, hi, n};
        };
        const auto [dlo, dhi, dn] = parse_range(sy_delta_range);
        const auto [elo, ehi, en] = parse_range(sy_eta_range);
        CsvWriter csv(g.out_path,
                      "gamma,delta,eta,re_mu_p,im_mu_p,re_mu_m,im_mu_m,re_sigma,im_sigma",
                      medium_json_line(p));
        csv.row() << std::setprecision(17);
        for (int j = 0; j < en; ++j) {
            const double eta = en == 1 ? elo : elo + (ehi - elo) * j / (en - 1);
            for (int i = 0; i < dn; ++i) {
                const double delta = dn == 1 ? dlo : dlo + (dhi - dlo) * i / (dn - 1);
                const SymbolEval ev = sigma({sy_gamma, delta, eta}, p);
                csv.row() << sy_gamma << ',' << delta << ',' << eta << ',' << ev.mu_plus.real()
                          << ',' << ev.mu_plus.imag() << ',' << ev.mu_minus.real() << ','
                          << ev.mu_minus.imag() << ',' << ev.sigma.real() << ','
                          << ev.sigma.imag() << "\n";
            }
        }
    });

    // ---- roots ----
    auto* cmd_roots = app.add_subcommand("roots", "neutral-mode quartic roots and acceptance");
    add_medium(cmd_roots);
    cmd_roots->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const NeutralRoots r = neutral_roots(p);
        json j{{"x1_sq", r.x1_sq},
               {"x2_sq", r.x2_sq},
               {"x1_accepted", r.x1_accepted},
               {"x2_accepted", r.x2_accepted}};
        j["simplicity"] = r.simplicity ? complex_json(*r.simplicity) : json(nullptr);
        emit_json(g, j);
    });

    // ---- threshold ----
    auto* cmd_threshold = app.add_subcommand("threshold", "critical velocity by bisection");
    add_medium(cmd_threshold);
    cmd_threshold->callback([&] {
        double c = med.c.value_or(1.0), rho = med.rho.value_or(1.0), b2 = med.b2.value_or(0.0);
        if (!g.config_path.empty()) {
            const MediumParams p = resolve_medium(g, med);
            c = p.c;
            rho = p.rho;
            b2 = p.b2;
        }
        const double v_crit = critical_velocity(c, rho, b2);
        std::printf("%.6f\n", v_crit);
        emit_json(g, json{{"v_crit", v_crit}});
    });

    // ---- sweep ----
    auto* cmd_sweep = app.add_subcommand("sweep", "CSV stability map over a velocity range");
    add_medium(cmd_sweep);
    std::string sweep_range = "0.5:3:0";
    int sweep_steps = 50, sweep_random = 0;
    cmd_sweep->add_option("--v-range", sweep_range, "lo:hi");
    cmd_sweep->add_option("--steps", sweep_steps, "number of uniform steps");
    cmd_sweep->add_option("--random", sweep_random, "random draws instead of uniform steps");
    cmd_sweep->callback([&] {
        const MediumParams base = resolve_medium(g, med);
        double lo, hi;
        if (std::sscanf(sweep_range.c_str(), "%lf:%lf", &lo, &hi) != 2 || !(lo > 0.0) || hi < lo)
            throw std::invalid_argument("bad --v-range " + sweep_range);
        std::vector<double> vs;
        if (sweep_random > 0) {
            std::mt19937_64 rng(g.seed);
            std::uniform_real_distribution<double> u(lo, hi);
            for (int i = 0; i < sweep_random; ++i) vs.push_back(u(rng));
        } else {
            for (int i = 0; i <= sweep_steps; ++i)
                vs.push_back(lo + (hi - lo) * i / std::max(1, sweep_steps));
        }
        struct Row {
            double v, mach, x1, x2, growth;
            Regime tag;
        };
        std::vector<Row> rows(vs.size());
        parallel_for(static_cast<int>(vs.size()), g.jobs, [&](int i) {
            const MediumParams p = derive_params(vs[i], base.c, base.rho, base.b2);
            const NeutralRoots r = neutral_roots(p);
            rows[i] = {vs[i], p.mach, r.x1_sq, r.x2_sq,
                       r.x1_sq < 0.0 ? std::sqrt(-r.x1_sq) : 0.0, classify_regime(p).tag};
        });
        CsvWriter csv(g.out_path, "v,M_B,x1_sq,x2_sq,verdict,growth_rate",
                      medium_json_line(base) + " sweep=" + sweep_range);
        csv.row() << std::setprecision(17);
        for (const Row& r : rows) {
            csv.row() << r.v << ',' << r.mach << ',' << r.x1 << ',' << r.x2 << ','
                      << to_string(r.tag) << ',' << r.growth << "\n";
        }
    });

    // ---- traces ----
    auto* cmd_traces = app.add_subcommand("traces", "solve the 4x4 boundary trace system");
    add_medium(cmd_traces);
    double tr_gamma = 1.0, tr_delta = 0.0, tr_eta = 1.0;
    double tr_fre = 1.0, tr_fim = 0.0;
    double tr_kp_amp = 0.0, tr_kp_rate = 1.0, tr_km_amp = 0.0, tr_km_rate = 1.0;
    cmd_traces->add_option("--gamma", tr_gamma, "Re tau (>= 1 when forcing present)");
    cmd_traces->add_option("--delta", tr_delta, "Im tau");
    cmd_traces->add_option("--eta", tr_eta, "wavenumber");
    cmd_traces->add_option("--f-re", tr_fre, "Re of the front mode");
    cmd_traces->add_option("--f-im", tr_fim, "Im of the front mode");
    cmd_traces->add_option("--k-plus-amp", tr_kp_amp, "upper forcing amplitude (exp preset)");
    cmd_traces->add_option("--k-plus-rate", tr_kp_rate, "upper forcing decay rate");
    cmd_traces->add_option("--k-minus-amp", tr_km_amp, "lower forcing amplitude (exp preset)");
    cmd_traces->add_option("--k-minus-rate", tr_km_rate, "lower forcing decay rate");
    cmd_traces->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const Frequency freq{tr_gamma, tr_delta, tr_eta};
        Complex ip{}, im{}, w{};
        if (tr_kp_amp != 0.0 || tr_km_amp != 0.0) {
            const WResult wr = compute_W(
                [&](double y) { return Complex(tr_kp_amp * std::exp(-tr_kp_rate * y), 0.0); },
                [&](double y) { return Complex(tr_km_amp * std::exp(-tr_km_rate * y), 0.0); },
                freq, p);
            ip = wr.i_plus;
            im = wr.i_minus;
            w = wr.w;
        }
        const TraceData t = solve_jump_system(Complex(tr_fre, tr_fim), ip, im, freq, p);
        emit_json(g, json{{"h_plus_0", complex_json(t.h_plus_0)},
                          {"h_minus_0", complex_json(t.h_minus_0)},
                          {"dh_plus_0", complex_json(t.dh_plus_0)},
                          {"dh_minus_0", complex_json(t.dh_minus_0)},
                          {"f_hat", complex_json(t.f_hat)},
                          {"W", complex_json(w)},
                          {"trace_identity_residual", trace_identity(t, freq, p)}});
    });

    // ---- profile ----
    auto* cmd_profile = app.add_subcommand("profile", "reconstruct an interior profile");
    add_medium(cmd_profile);
    std::string pr_side = "plus";
    double pr_len = 6.0;
    int pr_n = 200;
    double pr_gamma = 1.0, pr_delta = 0.0, pr_eta = 1.0, pr_fre = 1.0, pr_fim = 0.0;
    double pr_kp_amp = 0.0, pr_kp_rate = 1.0;
    cmd_profile->add_option("--side", pr_side, "plus | minus");
    cmd_profile->add_option("--L", pr_len, "profile length");
    cmd_profile->add_option("--n", pr_n, "grid points");
    cmd_profile->add_option("--gamma", pr_gamma, "Re tau (>= 1)");
    cmd_profile->add_option("--delta", pr_delta, "Im tau");
    cmd_profile->add_option("--eta", pr_eta, "wavenumber");
    cmd_profile->add_option("--f-re", pr_fre, "Re front mode");
    cmd_profile->add_option("--f-im", pr_fim, "Im front mode");
    cmd_profile->add_option("--k-amp", pr_kp_amp, "forcing amplitude (exp preset, both sides)");
    cmd_profile->add_option("--k-rate", pr_kp_rate, "forcing decay rate");
    cmd_profile->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const Frequency freq{pr_gamma, pr_delta, pr_eta};
        const Side side = pr_side == "minus" ? Side::minus : Side::plus;
        const ProfileFn k = [&](double y) {
            return Complex(pr_kp_amp * std::exp(-pr_kp_rate * y), 0.0);
        };
        const WResult wr = compute_W(k, k, freq, p);
        const TraceData t = solve_jump_system(Complex(pr_fre, pr_fim), wr.i_plus, wr.i_minus,
                                              freq, p);
        const InteriorProfile prof = reconstruct_profile(t, k, side, freq, p, pr_len, pr_n);
        CsvWriter csv(g.out_path, "x3,re_h,im_h,ode_residual", medium_json_line(p));
        csv.row() << std::setprecision(17);
        for (size_t i = 0; i < prof.x3.size(); ++i) {
            csv.row() << prof.x3[i] << ',' << prof.h[i].real() << ',' << prof.h[i].imag() << ','
                      << prof.ode_residual << "\n";
        }
        if (g.verbose) {
            std::cerr << "ode_residual=" << prof.ode_residual
                      << " bounded=" << prof.bounded
                      << " growth_warning=" << prof.growth_warning << "\n";
        }
    });

    // ---- front-solve ----
    auto* cmd_front = app.add_subcommand("front-solve", "solve the front equation on a lattice");
    add_medium(cmd_front);
    std::string fr_preset = "gaussian", fr_forcing_file;
    double fr_gamma = 1.0, fr_s = 0.0, fr_twin = 32.0, fr_xwin = 32.0;
    int fr_nt = 256, fr_nx = 128;
    cmd_front->add_option("--preset", fr_preset, "gaussian | zero");
    cmd_front->add_option("--forcing-file", fr_forcing_file, "CSV forcing (t,x1,x3,side,K)");
    cmd_front->add_option("--gamma", fr_gamma, "exponential weight (>= 1)");
    cmd_front->add_option("--s", fr_s, "Sobolev order");
    cmd_front->add_option("--t-win", fr_twin, "time window");
    cmd_front->add_option("--x-win", fr_xwin, "x1 window");
    cmd_front->add_option("--nt", fr_nt, "time samples (power of two)");
    cmd_front->add_option("--nx", fr_nx, "x1 samples (power of two)");
    cmd_front->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const SpectralGrid grid = make_spectral_grid(fr_twin, fr_xwin, fr_nt, fr_nx, fr_gamma);
        ForcingField forcing = fr_forcing_file.empty()
                                   ? (fr_preset == "zero" ? make_zero_forcing(grid)
                                                          : make_gaussian_forcing(grid, p))
                                   : load_forcing_csv(fr_forcing_file, grid);
        const FrontSolution sol = solve_front(forcing, fr_s, fr_gamma, p);
        CsvWriter csv(g.out_path, "t,x1,f_weighted",
                      medium_json_line(p) + " preset=" + forcing.preset);
        csv.row() << std::setprecision(17);
        for (int it = 0; it < grid.n_t; ++it) {
            for (int ix = 0; ix < grid.n_x; ++ix) {
                csv.row() << grid.t(it) << ',' << grid.x(ix) << ','
                          << sol.f_weighted[grid.idx(it, ix)] << "\n";
            }
        }
        if (g.verbose) {
            for (const NormReport& n : sol.norms)
                std::cerr << "norm s=" << n.s << " gamma=" << n.gamma << " value=" << n.value
                          << "\n";
            std::cerr << "min|Sigma|/Lambda^2=" << sol.min_symbol_norm
                      << " imag_ratio=" << sol.max_imag_ratio << "\n";
        }
    });

    // ---- estimate ----
    auto* cmd_estimate = app.add_subcommand("estimate", "a priori estimate ratio table");
    add_medium(cmd_estimate);
    std::string es_gammas = "1,2,4,8";
    double es_s = 0.0;
    cmd_estimate->add_option("--gammas", es_gammas, "comma-separated weights");
    cmd_estimate->add_option("--s", es_s, "Sobolev order");
    cmd_estimate->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        const ForcingField forcing = make_gaussian_forcing(default_estimate_grid(), p);
        const auto rows = estimate_report(forcing, es_s, parse_list(es_gammas), p);
        CsvWriter csv(g.out_path, "gamma,lhs,rhs,ratio,g_norm,chain_ratio", medium_json_line(p));
        csv.row() << std::setprecision(17);
        for (const EstimateRow& r : rows) {
            if (r.null_row) {
                csv.row() << r.gamma << ",,,,," << "\n";
            } else {
                csv.row() << r.gamma << ',' << r.lhs << ',' << r.rhs << ',' << r.ratio << ','
                          << std::sqrt(r.g_norm_sq) << ',' << r.chain_f_vs_g << "\n";
            }
        }
    });

    // ---- simulate ----
    auto* cmd_sim = app.add_subcommand("simulate", "time-domain run of one x1-Fourier mode");
    add_medium(cmd_sim);
    double si_eta = 1.0, si_T = 40.0, si_amp = 1e-2;
    int si_n = 2048;
    cmd_sim->add_option("--eta", si_eta, "wavenumber")->required();
    cmd_sim->add_option("--T", si_T, "final time");
    cmd_sim->add_option("--n", si_n, "grid points per side");
    cmd_sim->add_option("--amp", si_amp, "seed amplitude (0: null run)");
    cmd_sim->callback([&] {
        const MediumParams p = resolve_medium(g, med);
        SimOptions opt;
        opt.n_per_side = si_n;
        opt.collect_trajectory = true;
        const GrowthReport r = run_mode(si_eta, p, si_T, si_amp, opt);
        CsvWriter csv(g.out_path, "t,re_f,im_f,abs_f,interface_residual", medium_json_line(p));
        csv.row() << std::setprecision(17);
        for (const TrajSample& s : r.trajectory) {
            csv.row() << s.t << ',' << s.f.real() << ',' << s.f.imag() << ',' << std::abs(s.f)
                      << ',' << s.interface_residual << "\n";
        }
        std::printf("lambda = (%.6f, %.6f)  predicted = (%.6f, %.6f)  rel_error = %.4f\n",
                    r.lambda.real(), r.lambda.imag(), r.predicted.real(), r.predicted.imag(),
                    r.rel_error);
    });

    // ---- scan ----
    auto* cmd_scan = app.add_subcommand("scan", "growth-rate scan over a velocity list");
    add_medium(cmd_scan);
    std::string sc_vlist = "1.2,1.3,1.4,1.5";
    double sc_eta = 1.0, sc_T = 60.0;
    int sc_n = 1024;
    cmd_scan->add_option("--v-list", sc_vlist, "comma-separated velocities");
    cmd_scan->add_option("--eta", sc_eta, "wavenumber");
    cmd_scan->add_option("--T", sc_T, "final time per run");
    cmd_scan->add_option("--n", sc_n, "grid points per side");
    cmd_scan->callback([&] {
        const MediumParams base = resolve_medium(g, med);
        SimOptions opt;
        opt.n_per_side = sc_n;
        const std::vector<double> vs = parse_list(sc_vlist);
        struct Row {
            double v, re;
            bool growing;
        };
        std::vector<Row> rows(vs.size());
        parallel_for(static_cast<int>(vs.size()), g.jobs, [&](int i) {
            const MediumParams p = derive_params(vs[i], base.c, base.rho, base.b2);
            const GrowthReport r = run_mode(sc_eta, p, sc_T, 1e-2, opt);
            rows[i] = {vs[i], r.lambda.real(),
                       r.lambda.real() > 0.02 * std::abs(sc_eta) * p.c_b};
        });
        CsvWriter csv(g.out_path, "v,re_lambda,growing", medium_json_line(base));
        csv.row() << std::setprecision(17);
        for (const Row& r : rows)
            csv.row() << r.v << ',' << r.re << ',' << (r.growing ? 1 : 0) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
