#include "qchan/states.hpp"

#include <cmath>

namespace qchan {

PureState basis_ket(SystemLayout layout, Eigen::Index index) {
    if (index < 0 || index >= layout.dim())
        throw std::invalid_argument("basis_ket: index out of range");
    Vector amps = Vector::Zero(layout.dim());
    amps(index) = 1.0;
    return PureState(layout, std::move(amps));
}

PureState ghz_state(int n_ancillas) {
    SystemLayout layout = make_layout(n_ancillas);
    Vector amps = Vector::Zero(layout.dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    amps(0) = inv_sqrt2;
    amps(layout.dim() - 1) = inv_sqrt2;
    return PureState(layout, std::move(amps));
}

PureState w_state(int n_ancillas) {
    SystemLayout layout = make_layout(n_ancillas);
    Vector amps = Vector::Zero(layout.dim());
    const int nq = layout.qubits();
    const double amp = 1.0 / std::sqrt(static_cast<double>(nq));
    // |1_i>: qubit i excited, i.e. bit (nq - 1 - i) set.
    for (int q = 0; q < nq; ++q) amps(Eigen::Index{1} << (nq - 1 - q)) = amp;
    return PureState(layout, std::move(amps));
}

PureState bell_state(BellState which) {
    SystemLayout layout{1};
    Vector amps = Vector::Zero(4);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (which) {
        case BellState::phi_plus:
            amps(0) = inv_sqrt2;
            amps(3) = inv_sqrt2;
            break;
        case BellState::phi_minus:
            amps(0) = inv_sqrt2;
            amps(3) = -inv_sqrt2;
            break;
        case BellState::psi_plus:
            amps(1) = inv_sqrt2;
            amps(2) = inv_sqrt2;
            break;
        case BellState::psi_minus:
            amps(1) = inv_sqrt2;
            amps(2) = -inv_sqrt2;
            break;
    }
    return PureState(layout, std::move(amps));
}

PureState equatorial_state(double phi) {
    SystemLayout layout{0};
    Vector amps(2);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    amps(0) = inv_sqrt2;
    amps(1) = std::exp(Complex(0, -phi)) * inv_sqrt2;
    return PureState(layout, std::move(amps));
}

DensityOperator density_of(const PureState& psi) {
    Matrix m = psi.amps * psi.amps.adjoint();
    return DensityOperator(psi.layout, std::move(m));
}

}  // namespace qchan
