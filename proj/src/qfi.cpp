#include "qchan/qfi.hpp"

#include "qchan/linalg.hpp"
#include "qchan/states.hpp"

#include <cmath>

namespace qchan {

std::string_view to_string(QfiMethod method) {
    switch (method) {
        case QfiMethod::pure: return "pure";
        case QfiMethod::sld: return "sld";
        case QfiMethod::fidelity_fd: return "fidelity-fd";
        case QfiMethod::closed_form: return "closed-form";
        case QfiMethod::compressed: return "compressed";
    }
    return "?";
}

QfiEvaluation qfi_pure(const PureState& psi, const Vector& dpsi) {
    if (dpsi.size() != psi.amps.size()) throw std::invalid_argument("qfi_pure: dimension mismatch");
    const double dd = dpsi.squaredNorm();
    const Complex overlap = psi.amps.dot(dpsi);  // <psi|dpsi>
    const double value = 4.0 * (dd - std::norm(overlap));
    return QfiEvaluation{std::max(value, 0.0), QfiMethod::pure, 0.0, {1, 0, 0.0}};
}

QfiEvaluation qfi_sld(const DensityOperator& rho, const Matrix& drho, double p) {
    if (drho.rows() != rho.mat.rows() || drho.cols() != rho.mat.cols())
        throw std::invalid_argument("qfi_sld: derivative dimension mismatch");
    if (max_abs_deviation_from_hermitian(drho) > 1e-10)
        throw std::invalid_argument("qfi_sld: derivative not Hermitian");
    if (std::abs(drho.trace()) > 1e-10)
        throw std::invalid_argument("qfi_sld: derivative not traceless");

    const EigenSystem es = herm_eig(rho.mat);
    const Eigen::Index d = es.values.size();

    // Support = eigenvalues above the cutoff. Pairs inside the support enter
    // the double sum directly; pairs (support, kernel) reduce to
    // 4/p_i * <v_i| drho P_kernel drho |v_i> via the projector identity, so
    // the kernel basis never has to be materialized.
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < d; ++i)
        if (es.values(i) > kSldCutoff) support.push_back(i);
    const Eigen::Index r = static_cast<Eigen::Index>(support.size());

    Matrix vs(d, r);
    for (Eigen::Index k = 0; k < r; ++k) vs.col(k) = es.vectors.col(support[k]);

    const Matrix dv = drho * vs;       // d x r
    const Matrix a = vs.adjoint() * dv;  // <v_i|drho|v_j> on the support

    double qfi = 0.0;
    for (Eigen::Index i = 0; i < r; ++i) {
        const double pi = es.values(support[i]);
        for (Eigen::Index j = 0; j < r; ++j) {
            const double pj = es.values(support[j]);
            qfi += 2.0 * std::norm(a(i, j)) / (pi + pj);
        }
        const double kernel_weight = std::max(dv.col(i).squaredNorm() - a.col(i).squaredNorm(), 0.0);
        qfi += 4.0 * kernel_weight / pi;
    }

    // Count the pairs the cutoff excludes (eigenvalues are ascending).
    long dropped = 0;
    {
        Eigen::Index j = d;
        for (Eigen::Index i = 0; i < d; ++i) {
            while (j > 0 && es.values(i) + es.values(j - 1) > kSldCutoff) --j;
            dropped += j;
        }
    }

    return QfiEvaluation{qfi, QfiMethod::sld, p, {static_cast<int>(r), dropped, 0.0}};
}

QfiEvaluation qfi_fidelity_fd(const ChannelFamily& fam, const DensityOperator& rho_in,
                              const LossPattern& loss, double p, double step) {
    if (step <= 0.0) throw std::domain_error("qfi_fidelity_fd: step must be positive");
    if (p < 0.02 || p > 0.98)
        throw std::domain_error("qfi_fidelity_fd: oracle domain is p in [0.02, 0.98]");
    const double lo = p - step / 2.0, hi = p + step / 2.0;
    if (lo <= 0.0 || hi >= 1.0)
        throw std::domain_error("qfi_fidelity_fd: step pushes evaluation outside (0,1)");

    auto out_at = [&](double q) {
        DensityOperator rho = fam.apply_to(rho_in, q);
        return loss.empty() ? rho : partial_trace(rho, loss);
    };
    const DensityOperator rho_lo = out_at(lo);
    const DensityOperator rho_hi = out_at(hi);
    const double f = fidelity(rho_lo, rho_hi);
    const double value = 8.0 * (1.0 - std::sqrt(std::max(f, 0.0))) / (step * step);
    return QfiEvaluation{std::max(value, 0.0), QfiMethod::fidelity_fd, p, {0, 0, step}};
}

ParamState scheme_output(const ChannelFamily& fam, const PureState& input,
                         const LossPattern& loss, double p) {
    if (p <= 0.0 || p >= 1.0) throw std::domain_error("scheme_output: p must lie in (0,1)");
    if (input.layout.n_ancillas != fam.n_ancillas)
        throw std::invalid_argument("scheme_output: input layout does not match family register");
    const DensityOperator rho0 = density_of(input);
    DensityOperator rho = fam.apply_to(rho0, p);
    Matrix drho = output_derivative(fam, rho0);
    if (!loss.empty()) {
        const int nq = input.layout.qubits();
        drho = partial_trace(drho, nq, loss);
        rho = partial_trace(rho, loss);
    }
    return ParamState{std::move(rho), std::move(drho), p};
}

QfiEvaluation qfi_for_scheme(const ChannelFamily& fam, const PureState& input,
                             const LossPattern& loss, double p) {
    const ParamState st = scheme_output(fam, input, loss, p);
    return qfi_sld(st.rho, st.drho, p);
}

double qcrb_bound(double qfi, long m) {
    if (m < 1) throw std::invalid_argument("qcrb_bound: need at least one measurement");
    if (qfi <= 0.0) throw std::domain_error("qcrb_bound: zero QFI, variance bound is unbounded");
    return 1.0 / (static_cast<double>(m) * qfi);
}

MonotonicityReport check_monotonicity(const ParamState& state, const KrausChannel& post,
                                      double tol) {
    const double before = qfi_sld(state.rho, state.drho, state.p).value;
    DensityOperator rho_after = apply(post, state.rho);
    Matrix drho_after = apply_matrix(post, state.drho);
    drho_after = (drho_after + drho_after.adjoint()) / 2.0;
    const double after = qfi_sld(rho_after, drho_after, state.p).value;

    MonotonicityReport rep;
    rep.qfi_before = before;
    rep.qfi_after = after;
    rep.post_is_unitary = post.is_unitary();
    rep.pass = after <= before + tol;
    if (rep.post_is_unitary) rep.pass = rep.pass && std::abs(after - before) <= tol;
    return rep;
}

ConvexityReport check_convexity(const ParamState& a, const ParamState& b, double lambda,
                                double tol) {
    if (!(a.rho.layout == b.rho.layout))
        throw std::invalid_argument("check_convexity: states live on different registers");
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("check_convexity: lambda outside [0,1]");
    Matrix mixed = lambda * a.rho.mat + (1.0 - lambda) * b.rho.mat;
    Matrix dmixed = lambda * a.drho + (1.0 - lambda) * b.drho;
    const DensityOperator rho_mixed(a.rho.layout, std::move(mixed));

    ConvexityReport rep;
    rep.lambda = lambda;
    rep.mixed_qfi = qfi_sld(rho_mixed, dmixed, a.p).value;
    rep.weighted_sum = lambda * qfi_sld(a.rho, a.drho, a.p).value +
                       (1.0 - lambda) * qfi_sld(b.rho, b.drho, b.p).value;
    rep.pass = rep.mixed_qfi <= rep.weighted_sum + tol;
    return rep;
}

AdditivityReport check_additivity(const ParamState& a, const ParamState& b, double tol) {
    Matrix joint = tensor_product(a.rho.mat, b.rho.mat);
    Matrix djoint = tensor_product(a.drho, b.rho.mat) + tensor_product(a.rho.mat, b.drho);
    const SystemLayout joint_layout{a.rho.layout.qubits() + b.rho.layout.qubits() - 1};
    const DensityOperator rho_joint(joint_layout, std::move(joint));

    AdditivityReport rep;
    rep.joint_qfi = qfi_sld(rho_joint, djoint, a.p).value;
    rep.sum_of_parts =
        qfi_sld(a.rho, a.drho, a.p).value + qfi_sld(b.rho, b.drho, b.p).value;
    rep.pass = std::abs(rep.joint_qfi - rep.sum_of_parts) <= tol;
    return rep;
}

}  // namespace qchan
