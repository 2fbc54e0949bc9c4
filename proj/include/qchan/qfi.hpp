#pragma once

#include "qchan/channels.hpp"
#include "qchan/types.hpp"

#include <string_view>

namespace qchan {

enum class QfiMethod { pure, sld, fidelity_fd, closed_form, compressed };

std::string_view to_string(QfiMethod method);

struct QfiDiagnostics {
    int rank_used = 0;        // eigenvalues above the SLD cutoff
    long dropped_pairs = 0;   // (i,j) pairs with p_i + p_j <= cutoff
    double fd_step = 0.0;     // finite-difference step, if applicable
};

struct QfiEvaluation {
    double value = 0.0;
    QfiMethod method = QfiMethod::sld;
    double p = 0.0;
    QfiDiagnostics diag;
};

/// Pure-state QFI 4(<dpsi|dpsi> - |<psi|dpsi>|^2).
QfiEvaluation qfi_pure(const PureState& psi, const Vector& dpsi);

/// Spectral (SLD) QFI: sum over eigenpairs of 2|<v_i|drho|v_j>|^2/(p_i+p_j),
/// dropping pairs whose denominator falls below the cutoff.
QfiEvaluation qfi_sld(const DensityOperator& rho, const Matrix& drho, double p = 0.0);

/// Bures finite-difference oracle 8(1 - sqrt(F(rho(p-s/2), rho(p+s/2))))/s^2,
/// with the loss applied after the channel. Valid for p in [0.02, 0.98].
QfiEvaluation qfi_fidelity_fd(const ChannelFamily& fam, const DensityOperator& rho_in,
                              const LossPattern& loss, double p, double step = 1e-3);

/// A state together with its exact parameter derivative.
struct ParamState {
    DensityOperator rho;
    Matrix drho;
    double p = 0.0;
};

/// Post-channel, post-loss state and its exact derivative in p. The
/// derivative is pushed through the partial trace by linearity.
ParamState scheme_output(const ChannelFamily& fam, const PureState& input,
                         const LossPattern& loss, double p);

/// Main entry point: density_of -> channel -> loss -> exact derivative -> SLD.
QfiEvaluation qfi_for_scheme(const ChannelFamily& fam, const PureState& input,
                             const LossPattern& loss, double p);

/// Cramer-Rao bound 1/(m * qfi). Throws when qfi is zero (unbounded).
double qcrb_bound(double qfi, long m);

struct MonotonicityReport {
    double qfi_before = 0.0;
    double qfi_after = 0.0;
    bool post_is_unitary = false;
    bool pass = false;  // after <= before + tol, with equality for unitaries
};
MonotonicityReport check_monotonicity(const ParamState& state, const KrausChannel& post,
                                      double tol = 1e-8);

struct ConvexityReport {
    double lambda = 0.0;
    double mixed_qfi = 0.0;
    double weighted_sum = 0.0;
    bool pass = false;
};
ConvexityReport check_convexity(const ParamState& a, const ParamState& b, double lambda,
                                double tol = 1e-8);

struct AdditivityReport {
    double joint_qfi = 0.0;
    double sum_of_parts = 0.0;
    bool pass = false;
};
AdditivityReport check_additivity(const ParamState& a, const ParamState& b, double tol = 1e-8);

}  // namespace qchan
