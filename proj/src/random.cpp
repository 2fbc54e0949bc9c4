#include "qchan/random.hpp"

#include "qchan/linalg.hpp"

namespace qchan {

Matrix ginibre(Eigen::Index dim, RngEngine& rng) {
    std::normal_distribution<double> nd;
    Matrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(nd(rng), nd(rng));
    return g;
}

DensityOperator random_density(SystemLayout layout, RngEngine& rng) {
    Matrix g = ginibre(layout.dim(), rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityOperator(layout, std::move(rho));
}

PureState random_pure(SystemLayout layout, RngEngine& rng) {
    std::normal_distribution<double> nd;
    Vector v(layout.dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(nd(rng), nd(rng));
    v /= v.norm();
    return PureState(layout, std::move(v));
}

Matrix random_unitary(Eigen::Index dim, RngEngine& rng) {
    Matrix g = ginibre(dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    // Fix the phase ambiguity so the distribution does not favor R's signs.
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

KrausChannel random_channel(Eigen::Index dim, int n_ops, RngEngine& rng) {
    if (n_ops < 1) throw std::invalid_argument("random_channel: need at least one operator");
    std::vector<Matrix> raw;
    raw.reserve(n_ops);
    Matrix s = Matrix::Zero(dim, dim);
    for (int i = 0; i < n_ops; ++i) {
        raw.push_back(ginibre(dim, rng));
        s += raw.back().adjoint() * raw.back();
    }
    // S^{-1/2} via eigendecomposition; S is PD almost surely.
    EigenSystem es = herm_eig((s + s.adjoint()) / 2.0);
    Eigen::VectorXd inv_root = es.values.cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    Matrix whiten = es.vectors * inv_root.asDiagonal() * es.vectors.adjoint();
    std::vector<Matrix> ops;
    ops.reserve(n_ops);
    for (Matrix& a : raw) ops.push_back(a * whiten);
    return KrausChannel(std::move(ops));
}

}  // namespace qchan
