#pragma once

#include "qchan/types.hpp"

namespace qchan {

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

/// Computational-basis ket |index> over the given register.
PureState basis_ket(SystemLayout layout, Eigen::Index index);

/// (|0,0...0> + |1,1...1>)/sqrt(2) over n+1 qubits.
PureState ghz_state(int n_ancillas);

/// Single excitation spread evenly over n+1 qubits.
PureState w_state(int n_ancillas);

PureState bell_state(BellState which);

/// (|0> + e^{-i phi} |1>)/sqrt(2); Bloch vector in the xy plane.
PureState equatorial_state(double phi);

/// |psi><psi|.
DensityOperator density_of(const PureState& psi);

}  // namespace qchan
