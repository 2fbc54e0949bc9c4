#include "qchan/channels.hpp"

#include "qchan/linalg.hpp"

#include <cmath>

namespace qchan {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops) : ops(std::move(kraus_ops)) {
    if (ops.empty()) throw std::invalid_argument("KrausChannel: empty operator set");
    const Eigen::Index d = ops.front().rows();
    Matrix completeness = Matrix::Zero(d, d);
    for (const Matrix& e : ops) {
        if (e.rows() != d || e.cols() != d)
            throw std::invalid_argument("KrausChannel: operators must be square and same-dimensional");
        if (!e.allFinite()) throw std::invalid_argument("KrausChannel: non-finite operator");
        completeness += e.adjoint() * e;
    }
    if ((completeness - identity(d)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("KrausChannel: completeness sum E_i† E_i != I");
}

bool KrausChannel::is_unitary(double tol) const {
    if (ops.size() != 1) return false;
    const Matrix& u = ops.front();
    return (u.adjoint() * u - identity(u.rows())).cwiseAbs().maxCoeff() <= tol;
}

KrausChannel depolarizing(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("depolarizing: p outside [0,1]");
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * identity(2));
    ops.push_back(std::sqrt(p / 4.0) * pauli_x());
    ops.push_back(std::sqrt(p / 4.0) * pauli_y());
    ops.push_back(std::sqrt(p / 4.0) * pauli_z());
    return KrausChannel(std::move(ops));
}

KrausChannel phase_flip(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("phase_flip: p outside [0,1]");
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - p) * identity(2));
    ops.push_back(std::sqrt(p) * pauli_z());
    return KrausChannel(std::move(ops));
}

KrausChannel pauli_channel(double p1, double p2, double p3) {
    if (p1 < 0 || p2 < 0 || p3 < 0 || p1 + p2 + p3 > 1.0 + 1e-15)
        throw std::domain_error("pauli_channel: weights must be nonnegative with sum <= 1");
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(std::max(0.0, 1.0 - p1 - p2 - p3)) * identity(2));
    ops.push_back(std::sqrt(p1) * pauli_x());
    ops.push_back(std::sqrt(p2) * pauli_y());
    ops.push_back(std::sqrt(p3) * pauli_z());
    return KrausChannel(std::move(ops));
}

KrausChannel extend(const KrausChannel& ch, int n_ancillas) {
    if (ch.dim() != 2) throw std::invalid_argument("extend: channel must act on a single qubit");
    if (n_ancillas < 0) throw std::invalid_argument("extend: negative ancilla count");
    if (n_ancillas == 0) return ch;
    if (1 + n_ancillas > kMaxDenseQubits)
        throw std::invalid_argument("extend: register exceeds dense cap");
    const Matrix anc = identity(Eigen::Index{1} << n_ancillas);
    std::vector<Matrix> ops;
    ops.reserve(ch.ops.size());
    for (const Matrix& e : ch.ops) ops.push_back(tensor_product(e, anc));
    return KrausChannel(std::move(ops));
}

Matrix apply_matrix(const KrausChannel& ch, const Matrix& m) {
    if (m.rows() != ch.dim() || m.cols() != ch.dim())
        throw std::invalid_argument("apply: dimension mismatch");
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const Matrix& e : ch.ops) out += e * m * e.adjoint();
    return out;
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
    Matrix out = apply_matrix(ch, rho.mat);
    // Round off Hermiticity noise so the density-operator invariant holds exactly.
    out = (out + out.adjoint()) / 2.0;
    return DensityOperator(rho.layout, std::move(out));
}

Matrix apply_to_probe(const KrausChannel& ch, const Matrix& m) {
    if (ch.dim() != 2) throw std::invalid_argument("apply_to_probe: channel must be single-qubit");
    const Eigen::Index d = m.rows();
    if (m.cols() != d || d % 2 != 0) throw std::invalid_argument("apply_to_probe: bad dimension");
    const Eigen::Index h = d / 2;
    // The probe is the most significant bit, so m splits into 2x2 blocks of
    // size h and (E ⊗ I) m (E† ⊗ I) mixes them with scalar weights.
    Matrix out = Matrix::Zero(d, d);
    for (const Matrix& e : ch.ops)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Matrix acc = Matrix::Zero(h, h);
                for (int c = 0; c < 2; ++c)
                    for (int k = 0; k < 2; ++k) {
                        const Complex w = e(a, c) * std::conj(e(b, k));
                        if (w != 0.0) acc += w * m.block(c * h, k * h, h, h);
                    }
                out.block(a * h, b * h, h, h) += acc;
            }
    return out;
}

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::depolarizing: return "dep";
        case ChannelKind::phase_flip: return "ph";
        case ChannelKind::pauli: return "pauli";
    }
    return "?";
}

ChannelFamily ChannelFamily::make(ChannelKind kind, int n_ancillas) {
    if (kind == ChannelKind::pauli)
        throw std::invalid_argument("ChannelFamily::make: pauli needs make_pauli");
    if (n_ancillas < 0) throw std::invalid_argument("ChannelFamily: negative ancilla count");
    return ChannelFamily{kind, n_ancillas, {0, 0, 0}};
}

ChannelFamily ChannelFamily::make_pauli(double p1, double p2, double p3, int n_ancillas) {
    pauli_channel(p1, p2, p3);  // validate the triple
    return ChannelFamily{ChannelKind::pauli, n_ancillas, {p1, p2, p3}};
}

KrausChannel ChannelFamily::base_at(double p) const {
    switch (kind) {
        case ChannelKind::depolarizing: return depolarizing(p);
        case ChannelKind::phase_flip: return phase_flip(p);
        case ChannelKind::pauli: return pauli_channel(pauli_params[0], pauli_params[1], pauli_params[2]);
    }
    throw std::logic_error("ChannelFamily: unknown kind");
}

KrausChannel ChannelFamily::at(double p) const { return extend(base_at(p), n_ancillas); }

DensityOperator ChannelFamily::apply_to(const DensityOperator& rho, double p) const {
    if (rho.layout.n_ancillas != n_ancillas)
        throw std::invalid_argument("ChannelFamily: state layout does not match family register");
    Matrix out = apply_to_probe(base_at(p), rho.mat);
    out = (out + out.adjoint()) / 2.0;
    return DensityOperator(rho.layout, std::move(out));
}

Matrix output_derivative(const ChannelFamily& fam, const DensityOperator& rho_in) {
    Matrix hi = fam.apply_to(rho_in, 1.0).mat;
    Matrix lo = fam.apply_to(rho_in, 0.0).mat;
    return hi - lo;
}

}  // namespace qchan
