#pragma once

#include "qchan/analytic.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qchan {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int jobs = 0;     // 0 = hardware concurrency
    int trials = 200;
    std::uint64_t seed = 0x5eed'c0de'2024ull;
    /// Closed-form source used by the cross-validation suites; replaceable so
    /// tests can inject a corrupted value and watch the suite fail.
    std::function<double(const Scheme&, double)> closed_form;

    const std::function<double(const Scheme&, double)>& closed() const;
};

/// Cross-validation grids over channel x input x n x l x p.
CheckResult crossval_sld_vs_closed(int n_max, const std::vector<double>& ps,
                                   const VerifyOptions& opt = {});
CheckResult crossval_fd_vs_closed(int n_max, const std::vector<double>& ps,
                                  const VerifyOptions& opt = {});
CheckResult crossval_compressed_vs_dense(int n_max, const std::vector<double>& ps,
                                         const VerifyOptions& opt = {});

/// Compressed path far beyond the dense cap, plus its speed budget.
CheckResult compressed_large_scale();

/// Randomized property suites (fixed seed).
CheckResult property_monotonicity(const VerifyOptions& opt = {});
CheckResult property_unitary_invariance(const VerifyOptions& opt = {});
CheckResult property_convexity(const VerifyOptions& opt = {});
CheckResult property_additivity(const VerifyOptions& opt = {});
CheckResult property_pure_vs_sld(const VerifyOptions& opt = {});
CheckResult property_kg_spectra(const VerifyOptions& opt = {});

/// Exact structural statements: n-independence for GHZ, loss collapses,
/// probe-loss nullity, W-1 = Bell.
std::vector<CheckResult> structural_identities();

/// Pinned reference values (p = 0.2 benchmarks, the W-55 point, the
/// leading-term bracket).
std::vector<CheckResult> reference_value_checks();

CheckResult half_loss_band();
CheckResult asymptotic_limits();
CheckResult n_opt_ph_bruteforce(int l_max);

enum class VerifyLevel { fast, full };

std::vector<CheckResult> run_verify(VerifyLevel level, const VerifyOptions& opt = {});

/// Prints one line per check; returns 0 when everything passed, 1 otherwise.
int print_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace qchan
