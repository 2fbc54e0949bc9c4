#include "qchan/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qchan {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

}  // namespace

double max_abs_deviation_from_hermitian(const Matrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

LossPattern::LossPattern(std::vector<int> q) : qubits(std::move(q)) {
    std::sort(qubits.begin(), qubits.end());
    auto last = std::unique(qubits.begin(), qubits.end());
    if (last != qubits.end())
        throw std::invalid_argument("LossPattern: duplicate qubit index");
    if (!qubits.empty() && qubits.front() < 0)
        throw std::invalid_argument("LossPattern: negative qubit index");
}

LossPattern LossPattern::trailing_ancillas(int n_ancillas, int l, bool probe_lost) {
    if (l < 0 || l > n_ancillas)
        throw std::domain_error("LossPattern: lost ancilla count outside [0, n]");
    std::vector<int> q;
    if (probe_lost) q.push_back(0);
    for (int i = n_ancillas - l + 1; i <= n_ancillas; ++i) q.push_back(i);
    return LossPattern(std::move(q));
}

PureState::PureState(SystemLayout lay, Vector a) : layout(lay), amps(std::move(a)) {
    if (amps.size() != layout.dim())
        throw std::invalid_argument("PureState: amplitude count does not match layout");
    if (!amps.allFinite())
        throw std::invalid_argument("PureState: non-finite amplitudes");
    if (std::abs(amps.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("PureState: not normalized");
}

DensityOperator::DensityOperator(SystemLayout lay, Matrix m) : layout(lay), mat(std::move(m)) {
    if (mat.rows() != layout.dim() || mat.cols() != layout.dim())
        throw std::invalid_argument("DensityOperator: dimension does not match layout");
    require_finite(mat, "DensityOperator");
    if (max_abs_deviation_from_hermitian(mat) > kHermTol)
        throw std::invalid_argument("DensityOperator: not Hermitian");
    if (std::abs(mat.trace().real() - 1.0) > kTraceTol || std::abs(mat.trace().imag()) > kTraceTol)
        throw std::invalid_argument("DensityOperator: trace is not one");
}

void DensityOperator::check_psd() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("DensityOperator: negative eigenvalue beyond tolerance");
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    require_finite(a, "tensor_product");
    require_finite(b, "tensor_product");
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    const Eigen::Index cap = Eigen::Index{1} << kMaxDenseQubits;
    if (rows > cap || cols > cap)
        throw std::invalid_argument("tensor_product: result exceeds dense dimension cap");
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
    const Eigen::Index cap = Eigen::Index{1} << kMaxDenseQubits;
    if (a.size() * b.size() > cap)
        throw std::invalid_argument("tensor_product: result exceeds dense dimension cap");
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, int n_qubits, const LossPattern& lost) {
    if (m.rows() != m.cols() || m.rows() != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("partial_trace: matrix dimension does not match qubit count");
    if (!lost.qubits.empty() && lost.qubits.back() >= n_qubits)
        throw std::invalid_argument("partial_trace: qubit index out of range");
    if (lost.count() >= n_qubits)
        throw std::invalid_argument("partial_trace: nothing would remain");
    if (lost.empty()) return m;

    // Qubit q sits at bit (n_qubits - 1 - q) of a basis index.
    std::vector<int> kept_bits, lost_bits;
    {
        auto it = lost.qubits.begin();
        for (int q = 0; q < n_qubits; ++q) {
            const int bit = n_qubits - 1 - q;
            if (it != lost.qubits.end() && *it == q) {
                lost_bits.push_back(bit);
                ++it;
            } else {
                kept_bits.push_back(bit);
            }
        }
    }
    const int nk = static_cast<int>(kept_bits.size());
    const int nl = static_cast<int>(lost_bits.size());
    const Eigen::Index dk = Eigen::Index{1} << nk;
    const Eigen::Index dl = Eigen::Index{1} << nl;

    // Scatter compacted indices back onto their bit positions. The first
    // entry of kept_bits/lost_bits is the most significant compacted bit,
    // which preserves probe-first ordering in the result.
    auto scatter = [](Eigen::Index compact, const std::vector<int>& bits) {
        Eigen::Index full = 0;
        const int n = static_cast<int>(bits.size());
        for (int i = 0; i < n; ++i)
            if ((compact >> (n - 1 - i)) & 1) full |= Eigen::Index{1} << bits[i];
        return full;
    };

    std::vector<Eigen::Index> kept_full(dk), lost_full(dl);
    for (Eigen::Index i = 0; i < dk; ++i) kept_full[i] = scatter(i, kept_bits);
    for (Eigen::Index t = 0; t < dl; ++t) lost_full[t] = scatter(t, lost_bits);

    Matrix out = Matrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i)
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex s = 0;
            for (Eigen::Index t = 0; t < dl; ++t)
                s += m(kept_full[i] | lost_full[t], kept_full[j] | lost_full[t]);
            out(i, j) = s;
        }
    return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const LossPattern& lost) {
    Matrix reduced = partial_trace(rho.mat, rho.layout.qubits(), lost);
    const int remaining = rho.layout.qubits() - lost.count();
    return DensityOperator(SystemLayout{remaining - 1}, std::move(reduced));
}

EigenSystem herm_eig(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("herm_eig: matrix not square");
    require_finite(m, "herm_eig");
    if (max_abs_deviation_from_hermitian(m) > kEigInputTol)
        throw std::invalid_argument("herm_eig: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    if (es.info() != Eigen::Success) throw std::runtime_error("herm_eig: solver failed");
    return EigenSystem{es.eigenvalues(), es.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& m) {
    EigenSystem es = herm_eig(m);
    Eigen::VectorXd vals = es.values;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -1e-10) throw std::invalid_argument("psd_sqrt: matrix not PSD");
        vals(i) = std::sqrt(std::max(vals(i), 0.0));
    }
    return es.vectors * vals.asDiagonal() * es.vectors.adjoint();
}

double trace_norm(const Matrix& m) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    if (!(rho.layout == sigma.layout)) throw std::invalid_argument("fidelity: layout mismatch");
    // (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, equal to ||rho^(1/2) sigma^(1/2)||_1^2.
    Matrix root = psd_sqrt(rho.mat);
    Matrix inner = root * sigma.mat * root;
    EigenSystem es = herm_eig(inner);
    // Zero eigenvalues of the (often rank-deficient) inner matrix surface as
    // O(eps) noise whose square roots would dominate the error; cut them.
    const double cutoff =
        static_cast<double>(es.values.size()) * 1e-15 * std::max(es.values.maxCoeff(), 0.0);
    double sum = 0;
    for (Eigen::Index i = 0; i < es.values.size(); ++i)
        if (es.values(i) > cutoff) sum += std::sqrt(es.values(i));
    return sum * sum;
}

double bures_distance_sq(const DensityOperator& rho, const DensityOperator& sigma) {
    const double f = fidelity(rho, sigma);
    return std::max(0.0, 2.0 * (1.0 - std::sqrt(std::max(f, 0.0))));
}

}  // namespace qchan
