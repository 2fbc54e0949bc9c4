#pragma once

#include "qchan/types.hpp"

#include <array>
#include <vector>

namespace qchan {

/// A CPTP map as a finite Kraus set {E_i} with sum_i E_i† E_i = I.
struct KrausChannel {
    std::vector<Matrix> ops;

    explicit KrausChannel(std::vector<Matrix> kraus_ops);

    Eigen::Index dim() const { return ops.front().rows(); }
    /// True for a single-operator channel whose operator is unitary.
    bool is_unitary(double tol = 1e-10) const;
};

/// Kraus sets of the two named channels and the general qubit Pauli channel.
/// Zero-weight operators are kept so the set size never changes with p.
KrausChannel depolarizing(double p);
KrausChannel phase_flip(double p);
KrausChannel pauli_channel(double p1, double p2, double p3);

/// Extend a single-qubit channel by the identity on n ancillas: E_i ⊗ I^{⊗n}.
KrausChannel extend(const KrausChannel& ch, int n_ancillas);

/// sum_i E_i rho E_i†.
DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);
Matrix apply_matrix(const KrausChannel& ch, const Matrix& m);

/// Apply a single-qubit Kraus set to the probe of a multi-qubit operator
/// without materializing the extended operators. Equal to
/// apply_matrix(extend(ch, n), m).
Matrix apply_to_probe(const KrausChannel& single_qubit_ch, const Matrix& m);

enum class ChannelKind { depolarizing, phase_flip, pauli };

const char* to_string(ChannelKind kind);

/// A p-parametrized channel on 1 probe + n ancillas. The pauli kind carries a
/// fixed (p1,p2,p3) triple and does not depend on p.
struct ChannelFamily {
    ChannelKind kind = ChannelKind::depolarizing;
    int n_ancillas = 0;
    std::array<double, 3> pauli_params{0, 0, 0};

    static ChannelFamily make(ChannelKind kind, int n_ancillas);
    static ChannelFamily make_pauli(double p1, double p2, double p3, int n_ancillas);

    /// Single-qubit Kraus set at parameter p (not extended).
    KrausChannel base_at(double p) const;
    /// Extended Kraus set at parameter p.
    KrausChannel at(double p) const;
    /// Channel output for a state on the full register.
    DensityOperator apply_to(const DensityOperator& rho, double p) const;
};

/// Exact d(rho_out)/dp. The output of every family is affine in p, so the
/// derivative is rho_out(1) - rho_out(0) independent of p.
Matrix output_derivative(const ChannelFamily& fam, const DensityOperator& rho_in);

}  // namespace qchan
