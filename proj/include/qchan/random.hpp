#pragma once

#include "qchan/channels.hpp"
#include "qchan/types.hpp"

#include <random>

namespace qchan {

using RngEngine = std::mt19937_64;

/// Matrix of iid standard complex Gaussians.
Matrix ginibre(Eigen::Index dim, RngEngine& rng);

/// Full-rank random density operator G G† / tr(G G†).
DensityOperator random_density(SystemLayout layout, RngEngine& rng);

PureState random_pure(SystemLayout layout, RngEngine& rng);

/// Haar-ish random unitary from the QR decomposition of a Ginibre matrix.
Matrix random_unitary(Eigen::Index dim, RngEngine& rng);

/// Random CPTP channel with n_ops Kraus operators: A_i S^{-1/2} with
/// S = sum_i A_i† A_i.
KrausChannel random_channel(Eigen::Index dim, int n_ops, RngEngine& rng);

}  // namespace qchan
