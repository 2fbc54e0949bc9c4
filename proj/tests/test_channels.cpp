#include "qchan/channels.hpp"
#include "qchan/linalg.hpp"
#include "qchan/random.hpp"
#include "qchan/states.hpp"

#include "doctest.h"

using namespace qchan;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix kraus_completeness(const KrausChannel& ch) {
    Matrix sum = Matrix::Zero(ch.dim(), ch.dim());
    for (const Matrix& e : ch.ops) sum += e.adjoint() * e;
    return sum;
}

}  // namespace

TEST_CASE("depolarizing channel action") {
    DensityOperator zero = density_of(basis_ket(SystemLayout{0}, 0));

    // p = 0 is the identity channel.
    CHECK(max_abs(apply(depolarizing(0.0), zero).mat - zero.mat) < 1e-15);
    // p = 1 fully mixes.
    CHECK(max_abs(apply(depolarizing(1.0), zero).mat - identity(2) / 2.0) < 1e-15);
    // p = 0.5 on |0><0| -> diag(0.75, 0.25).
    Matrix out = apply(depolarizing(0.5), zero).mat;
    CHECK(out(0, 0).real() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(out(1, 1).real() == doctest::Approx(0.25).epsilon(1e-14));

    // Action equals p I/2 + (1-p) rho on random states.
    RngEngine rng(21);
    for (double p : {0.1, 0.6, 0.9}) {
        DensityOperator rho = random_density(SystemLayout{0}, rng);
        Matrix expect = p * identity(2) / 2.0 + (1.0 - p) * rho.mat;
        CHECK(max_abs(apply(depolarizing(p), rho).mat - expect) < 1e-14);
    }
    CHECK_THROWS_AS(depolarizing(-0.1), std::domain_error);
    CHECK_THROWS_AS(depolarizing(1.1), std::domain_error);
}

TEST_CASE("phase flip channel action") {
    DensityOperator plus = density_of(equatorial_state(0.0));
    CHECK(max_abs(apply(phase_flip(0.0), plus).mat - plus.mat) < 1e-15);
    CHECK(max_abs(apply(phase_flip(0.5), plus).mat - identity(2) / 2.0) < 1e-15);

    Matrix out = apply(phase_flip(0.2), plus).mat;
    CHECK(out(0, 1).real() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(out(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));

    // Diagonal entries never move; off-diagonals scale by (1-2p).
    RngEngine rng(22);
    DensityOperator rho = random_density(SystemLayout{0}, rng);
    Matrix deph = apply(phase_flip(0.3), rho).mat;
    CHECK(std::abs(deph(0, 0) - rho.mat(0, 0)) < 1e-14);
    CHECK(std::abs(deph(0, 1) - 0.4 * rho.mat(0, 1)) < 1e-14);
}

TEST_CASE("pauli channel reductions") {
    RngEngine rng(23);
    DensityOperator rho = random_density(SystemLayout{0}, rng);
    const double p = 0.37;

    Matrix dep_out = apply(depolarizing(p), rho).mat;
    Matrix pauli_dep = apply(pauli_channel(p / 4, p / 4, p / 4), rho).mat;
    CHECK(max_abs(dep_out - pauli_dep) < 1e-14);

    Matrix ph_out = apply(phase_flip(p), rho).mat;
    Matrix pauli_ph = apply(pauli_channel(0, 0, p), rho).mat;
    CHECK(max_abs(ph_out - pauli_ph) < 1e-14);

    CHECK(max_abs(apply(pauli_channel(0, 0, 0), rho).mat - rho.mat) < 1e-15);
    CHECK_THROWS_AS(pauli_channel(0.5, 0.4, 0.3), std::domain_error);
    CHECK_THROWS_AS(pauli_channel(-0.1, 0, 0), std::domain_error);
}

TEST_CASE("kraus completeness for constructed and extended channels") {
    for (double p : {0.0, 0.25, 1.0}) {
        CHECK(max_abs(kraus_completeness(depolarizing(p)) - identity(2)) < 1e-12);
        CHECK(max_abs(kraus_completeness(phase_flip(p)) - identity(2)) < 1e-12);
        KrausChannel ext = extend(depolarizing(p), 3);
        CHECK(max_abs(kraus_completeness(ext) - identity(16)) < 1e-12);
        CHECK(ext.ops.size() == 4);  // zero-weight operators are kept
    }
    std::vector<Matrix> bad{pauli_x() * 0.5};
    CHECK_THROWS_AS(KrausChannel{bad}, std::invalid_argument);
}

TEST_CASE("extension examples") {
    // extend(ch, 0) leaves the channel untouched.
    KrausChannel base = phase_flip(0.3);
    KrausChannel same = extend(base, 0);
    REQUIRE(same.ops.size() == base.ops.size());
    for (size_t i = 0; i < base.ops.size(); ++i) CHECK(max_abs(same.ops[i] - base.ops[i]) == 0.0);

    // Depolarizing on a Bell pair: (1-3p/4) phi+ + (p/4)(phi- + psi+ + psi-).
    const double p = 0.4;
    DensityOperator bell = density_of(bell_state(BellState::phi_plus));
    Matrix out = apply(extend(depolarizing(p), 1), bell).mat;
    Matrix expected = (1.0 - 0.75 * p) * bell.mat +
                      0.25 * p * (density_of(bell_state(BellState::phi_minus)).mat +
                                  density_of(bell_state(BellState::psi_plus)).mat +
                                  density_of(bell_state(BellState::psi_minus)).mat);
    CHECK(max_abs(out - expected) < 1e-14);

    // Phase flip on GHZ: corner coherences scale to (1-2p)/2.
    for (int n : {1, 2, 3}) {
        DensityOperator ghz = density_of(ghz_state(n));
        Matrix ph_out = apply(extend(phase_flip(p), n), ghz).mat;
        const Eigen::Index last = ghz.mat.rows() - 1;
        CHECK(ph_out(0, last).real() == doctest::Approx((1.0 - 2.0 * p) / 2.0).epsilon(1e-13));
        CHECK(ph_out(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("apply_to_probe equals the extended channel") {
    RngEngine rng(29);
    for (int n : {1, 2, 3}) {
        DensityOperator rho = random_density(SystemLayout{n}, rng);
        for (const KrausChannel& ch : {depolarizing(0.35), phase_flip(0.2)}) {
            Matrix via_extend = apply_matrix(extend(ch, n), rho.mat);
            Matrix via_blocks = apply_to_probe(ch, rho.mat);
            CHECK(max_abs(via_extend - via_blocks) < 1e-13);
        }
    }
}

TEST_CASE("apply preserves trace and hermiticity on random inputs") {
    RngEngine rng(31);
    for (int t = 0; t < 20; ++t) {
        DensityOperator rho = random_density(SystemLayout{1}, rng);
        KrausChannel ch = random_channel(4, 3, rng);
        DensityOperator out = apply(ch, rho);
        CHECK(std::abs(out.mat.trace().real() - 1.0) <= 1e-12);
        CHECK_NOTHROW(out.check_psd());
    }
}

TEST_CASE("loss commutes with extension over untouched ancillas") {
    RngEngine rng(37);
    const int n = 3;
    DensityOperator rho = random_density(SystemLayout{n}, rng);
    for (ChannelKind kind : {ChannelKind::depolarizing, ChannelKind::phase_flip}) {
        const ChannelFamily fam = ChannelFamily::make(kind, n);
        const LossPattern loss = LossPattern::trailing_ancillas(n, 2);
        Matrix lose_after = partial_trace(fam.apply_to(rho, 0.3).mat, n + 1, loss);

        DensityOperator reduced = partial_trace(rho, loss);
        const ChannelFamily fam_small = ChannelFamily::make(kind, n - 2);
        Matrix lose_before = fam_small.apply_to(reduced, 0.3).mat;
        CHECK(max_abs(lose_after - lose_before) < 1e-13);
    }
}

TEST_CASE("losing the probe erases the parameter") {
    RngEngine rng(41);
    const int n = 2;
    DensityOperator rho = random_density(SystemLayout{n}, rng);
    const LossPattern probe({0});
    for (ChannelKind kind : {ChannelKind::depolarizing, ChannelKind::phase_flip}) {
        const ChannelFamily fam = ChannelFamily::make(kind, n);
        Matrix after = partial_trace(fam.apply_to(rho, 0.7).mat, n + 1, probe);
        Matrix before = partial_trace(rho.mat, n + 1, probe);
        CHECK(max_abs(after - before) < 1e-13);
    }
}

TEST_CASE("depolarizing is covariant under unitary conjugation") {
    RngEngine rng(43);
    for (int t = 0; t < 10; ++t) {
        DensityOperator rho = random_density(SystemLayout{0}, rng);
        Matrix u = random_unitary(2, rng);
        Matrix rotated = u * rho.mat * u.adjoint();
        rotated = (rotated + rotated.adjoint()) / 2.0;
        Matrix lhs = apply(depolarizing(0.3), DensityOperator(SystemLayout{0}, rotated)).mat;
        Matrix rhs = u * apply(depolarizing(0.3), rho).mat * u.adjoint();
        CHECK(max_abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("output derivative is exact, traceless and Hermitian") {
    RngEngine rng(47);
    for (ChannelKind kind : {ChannelKind::depolarizing, ChannelKind::phase_flip}) {
        for (int n : {0, 2}) {
            const ChannelFamily fam = ChannelFamily::make(kind, n);
            DensityOperator rho = random_density(SystemLayout{n}, rng);
            Matrix d = output_derivative(fam, rho);
            CHECK(std::abs(d.trace()) < 1e-12);
            CHECK(max_abs(d - d.adjoint()) < 1e-12);
            for (double p : {0.15, 0.5, 0.85}) {
                Matrix affine = fam.apply_to(rho, 0.0).mat + p * d;
                CHECK(max_abs(affine - fam.apply_to(rho, p).mat) < 1e-12);
            }
        }
    }
}

TEST_CASE("output derivative closed forms") {
    RngEngine rng(53);
    DensityOperator rho = random_density(SystemLayout{0}, rng);
    // Depolarizing: d rho_out / dp = I/2 - rho.
    Matrix d_dep = output_derivative(ChannelFamily::make(ChannelKind::depolarizing, 0), rho);
    CHECK(max_abs(d_dep - (identity(2) / 2.0 - rho.mat)) < 1e-14);

    // Phase flip on |+>: derivative is Z rho Z - rho, i.e. -1 off-diagonal.
    DensityOperator plus = density_of(equatorial_state(0.0));
    Matrix d_ph = output_derivative(ChannelFamily::make(ChannelKind::phase_flip, 0), plus);
    CHECK(d_ph(0, 1).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(d_ph(1, 0).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(d_ph(0, 0)) < 1e-15);

    // Stationary input has zero derivative.
    DensityOperator mixed(SystemLayout{0}, identity(2) / 2.0);
    CHECK(max_abs(output_derivative(ChannelFamily::make(ChannelKind::depolarizing, 0), mixed)) <
          1e-15);
}

TEST_CASE("pauli family is constant in p and affine in its own weights") {
    RngEngine rng(59);
    DensityOperator rho = random_density(SystemLayout{0}, rng);
    const ChannelFamily fam = ChannelFamily::make_pauli(0.1, 0.2, 0.3, 0);
    CHECK(max_abs(output_derivative(fam, rho)) < 1e-14);

    // rho_out is affine in p1 with p2, p3 fixed.
    auto out_at = [&](double p1) { return apply(pauli_channel(p1, 0.2, 0.3), rho).mat; };
    Matrix slope = out_at(0.5) - out_at(0.0);
    CHECK(max_abs(out_at(0.25) - (out_at(0.0) + 0.5 * slope)) < 1e-13);
}
