// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include "qchan/linalg.hpp"
#include "qchan/sweep.hpp"
#include "qchan/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace qchan;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%2d] %-58s %s  (%s)\n", id, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> p_grid_05_to_95() {
    std::vector<double> ps;
    for (int i = 1; i <= 19; ++i) ps.push_back(0.05 * i);
    return ps;
}

std::vector<double> p_grid_tenths() {
    std::vector<double> ps;
    for (int i = 1; i <= 9; ++i) ps.push_back(i / 10.0);
    return ps;
}

}  // namespace

int main() {
    const VerifyOptions opt;  // default jobs = hardware concurrency, 200 trials

    // 1. sld vs closed-form over the full grid, within 5 minutes.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const CheckResult r = crossval_sld_vs_closed(8, p_grid_05_to_95(), opt);
        const double secs = seconds_since(t0);
        std::ostringstream d;
        d << r.detail << "; " << fmt_g12(secs) << " s";
        criterion(1, "cross-validation sld vs closed (n<=8, rel<=1e-8)",
                  r.pass && secs <= 300.0, d.str());
    }

    // 2. fidelity-fd oracle vs closed-form, n <= 6, rel <= 1e-3.
    {
        const CheckResult r = crossval_fd_vs_closed(6, p_grid_05_to_95(), opt);
        criterion(2, "oracle fidelity-fd vs closed (n<=6, rel<=1e-3)", r.pass, r.detail);
    }

    // 3. Pinned reference values at p = 0.2.
    {
        bool pass = true;
        std::ostringstream d;
        for (const CheckResult& r : reference_value_checks()) {
            pass = pass && r.pass;
            if (!r.pass) d << r.name << " failed: " << r.detail << "; ";
        }
        if (pass) d << "benchmarks, W-55 value, n_opt and leading term all match";
        criterion(3, "pinned reference values at p=0.2", pass, d.str());
    }

    // 4. Structural identities at 1e-10.
    {
        bool pass = true;
        std::ostringstream d;
        for (const CheckResult& r : structural_identities()) {
            pass = pass && r.pass;
            if (!r.pass) d << r.name << ": " << r.detail << "; ";
        }
        if (pass) d << "all six identities hold";
        criterion(4, "structural identities (tol 1e-10)", pass, d.str());
    }

    // 5. Figure-2 crossing at p = 0.2.
    {
        const double p = 0.2;
        const double w2 = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, 2, 1}, p);
        const double sep = qfi_sep(ChannelKind::depolarizing, p);
        const double w5 = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, 5, 1}, p);
        const bool pass = std::abs(w2 - 2.3954) <= 1e-3 && std::abs(sep - 2.7778) <= 1e-3 &&
                          std::abs(w5 - 3.0658) <= 1e-3 && w2 < sep && sep < w5;
        std::ostringstream d;
        d << "W-2 lost-1 " << fmt_g12(w2) << " < sep " << fmt_g12(sep) << " < W-5 lost-1 "
          << fmt_g12(w5);
        criterion(5, "figure-2 crossing W-2 < separable < W-5 under loss", pass, d.str());
    }

    // 6. Half-loss rule for n in {10, 20, 40}.
    {
        const CheckResult r = half_loss_band();
        criterion(6, "half-loss threshold ratio in [0.35, 0.65]", r.pass, r.detail);
    }

    // 7. Asymptotics at n = 10^4.
    {
        const CheckResult r = asymptotic_limits();
        criterion(7, "asymptotic limits at n = 10^4", r.pass, r.detail);
    }

    // 8. Randomized property suites, 200 trials each, fixed seed.
    {
        bool pass = true;
        std::ostringstream d;
        for (const CheckResult& r :
             {property_monotonicity(opt), property_unitary_invariance(opt), property_convexity(opt),
              property_additivity(opt), property_pure_vs_sld(opt), property_kg_spectra(opt)}) {
            pass = pass && r.pass;
            if (!r.pass) d << r.name << ": " << r.detail << "; ";
        }
        if (pass) d << "monotonicity, unitary equality, convexity, additivity, pure-vs-sld, K/G";
        criterion(8, "randomized property suites (200 trials)", pass, d.str());
    }

    // 9. Compressed vs dense equivalence plus the large-n speed budget.
    {
        const CheckResult grid = crossval_compressed_vs_dense(8, p_grid_tenths(), opt);
        const auto t0 = std::chrono::steady_clock::now();
        const double q =
            compressed_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, 1000, 250}, 0.2).value;
        const double secs = seconds_since(t0);
        std::ostringstream d;
        d << grid.detail << "; n=1000 evaluation " << fmt_g12(secs * 1e3) << " ms";
        criterion(9, "compressed vs dense (rel<=1e-10) and n=10^3 under 1 s",
                  grid.pass && q > 0.0 && secs <= 1.0, d.str());
    }

    // 10. verify fast within 60 s, verify full within 15 min, both clean.
    {
        std::ostringstream sink;
        const auto t_fast = std::chrono::steady_clock::now();
        const int fast_rc = print_report(run_verify(VerifyLevel::fast, opt), sink);
        const double fast_secs = seconds_since(t_fast);

        const auto t_full = std::chrono::steady_clock::now();
        const int full_rc = print_report(run_verify(VerifyLevel::full, opt), sink);
        const double full_secs = seconds_since(t_full);

        std::ostringstream d;
        d << "fast rc=" << fast_rc << " in " << fmt_g12(fast_secs) << " s; full rc=" << full_rc
          << " in " << fmt_g12(full_secs) << " s";
        criterion(10, "verify fast <= 60 s and full <= 15 min, both exit 0",
                  fast_rc == 0 && full_rc == 0 && fast_secs <= 60.0 && full_secs <= 900.0, d.str());
    }

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
