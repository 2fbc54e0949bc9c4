#pragma once

#include "qchan/qfi.hpp"
#include "qchan/types.hpp"

#include <vector>

namespace qchan {

enum class InputKind { ghz, w, separable, bell };

const char* to_string(InputKind kind);

/// A named estimation scheme: channel kind, input family, ancilla count n,
/// lost-ancilla count l, and whether the probe itself is lost.
struct Scheme {
    ChannelKind channel = ChannelKind::depolarizing;
    InputKind input = InputKind::ghz;
    int n = 1;
    int l = 0;
    bool probe_lost = false;
};

/// Throws std::domain_error if the scheme is outside the supported family
/// (ghz needs n >= 1; w needs n >= 0; 0 <= l <= n; separable/bell take no loss).
void validate_scheme(const Scheme& s);

/// m x m matrix with constant (m-1)x(m-1) block a, border b and corner c.
struct KBlock {
    int m = 2;
    double a = 0, b = 0, c = 0;
};

/// m x m constant matrix.
struct GBlock {
    int m = 1;
    double a = 0;
};

/// Eigenvector of a KBlock in the form (head, ..., head, tail).
struct KEigenpair {
    double value = 0;
    double head = 0, tail = 0;
    Eigen::VectorXd dense(int m) const;
};

/// The two nonzero-eigenvalue pairs of K (rank two); the kernel has
/// dimension m - 2.
struct KSpectrum {
    KEigenpair plus, minus;
    int kernel_dim = 0;
};
KSpectrum k_block_spectrum(const KBlock& k);

struct GSpectrum {
    double value = 0;  // eigenvalue m*a, eigenvector (1,...,1)
    int kernel_dim = 0;
};
GSpectrum g_block_spectrum(const GBlock& g);

Eigen::MatrixXd k_block_dense(const KBlock& k);
Eigen::MatrixXd g_block_dense(const GBlock& g);

/// All closed-form QFI expressions, dispatched on the scheme.
double closed_form_qfi(const Scheme& s, double p);

/// Benchmarks: optimal (maximally entangled probe-ancilla pair) and best
/// separable strategy per channel.
double qfi_opt(ChannelKind channel, double p);
double qfi_sep(ChannelKind channel, double p);

/// SLD computation carried out on the low-excitation block representation of
/// the post-channel, post-loss state. Exact in p, O(1) per evaluation, and
/// valid far beyond the dense register cap.
QfiEvaluation compressed_qfi(const Scheme& s, double p);

/// Exact argmax over n >= max(l,1) of the lost-l W QFI for the depolarizing
/// channel; ties break toward smaller n.
int n_opt_dep(int l, double p);
/// Leading-order approximation (2 + 2/sqrt(2-p)) l.
double n_opt_dep_leading(int l, double p);

/// Optimal ancilla counts for the phase-flip channel: the floor/ceil
/// candidates of l + sqrt(1+l), one or both depending on which wins.
std::vector<int> n_opt_ph(int l);

/// Largest l such that the lost-l W scheme still beats the separable
/// strategy for the depolarizing channel.
int half_loss_threshold(int n, double p);

}  // namespace qchan
