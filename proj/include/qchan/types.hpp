#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense registers are capped at 12 qubits (dimension 4096); larger W/GHZ
/// schemes go through the compressed block path in analytic.hpp.
inline constexpr int kMaxDenseQubits = 12;
inline constexpr long kMaxCompressedAncillas = 10'000'000;

inline constexpr double kHermTol = 1e-12;    // max elementwise |M - M†|
inline constexpr double kTraceTol = 1e-12;   // |tr(rho) - 1|
inline constexpr double kPsdTol = 1e-12;     // eigenvalues >= -kPsdTol
inline constexpr double kEigInputTol = 1e-10;
inline constexpr double kSldCutoff = 1e-12;  // drop pairs with p_i + p_j below this

/// One probe qubit plus n ancillas. Qubit 0 is the probe and occupies the
/// most significant bit of a computational-basis index, so a basis ket reads
/// |probe, ancilla_1, ..., ancilla_n>.
struct SystemLayout {
    int n_ancillas = 0;

    int qubits() const { return n_ancillas + 1; }
    Eigen::Index dim() const { return Eigen::Index{1} << qubits(); }

    friend bool operator==(const SystemLayout&, const SystemLayout&) = default;
};

inline SystemLayout make_layout(int n_ancillas) {
    if (n_ancillas < 0)
        throw std::invalid_argument("SystemLayout: negative ancilla count");
    if (n_ancillas + 1 > kMaxDenseQubits)
        throw std::invalid_argument("SystemLayout: register exceeds dense cap of " +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    return SystemLayout{n_ancillas};
}

/// Qubit indices traced out after channel application. Kept sorted and
/// duplicate-free; index 0 is the probe.
struct LossPattern {
    std::vector<int> qubits;

    LossPattern() = default;
    explicit LossPattern(std::vector<int> q);

    static LossPattern none() { return LossPattern{}; }
    /// Lose the last `l` ancillas of an n-ancilla register, optionally the probe too.
    static LossPattern trailing_ancillas(int n_ancillas, int l, bool probe_lost = false);

    bool empty() const { return qubits.empty(); }
    int count() const { return static_cast<int>(qubits.size()); }
    bool includes_probe() const { return !qubits.empty() && qubits.front() == 0; }
};

double max_abs_deviation_from_hermitian(const Matrix& m);

/// Normalized pure state over a register.
struct PureState {
    SystemLayout layout;
    Vector amps;

    PureState(SystemLayout lay, Vector a);
};

/// Hermitian, unit-trace operator over a register. Hermiticity and trace are
/// enforced on construction; positive semidefiniteness (which needs an
/// eigendecomposition) is checked on demand via check_psd().
struct DensityOperator {
    SystemLayout layout;
    Matrix mat;

    DensityOperator(SystemLayout lay, Matrix m);

    /// Throws if any eigenvalue is below -kPsdTol.
    void check_psd() const;
};

}  // namespace qchan
