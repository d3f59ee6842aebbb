#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gamefix/distributions.hpp"
#include "gamefix/game.hpp"

namespace gamefix {

// An m-tuple of k x k column-stochastic matrices, one chain per index.
struct ChainFamily {
  std::vector<Eigen::MatrixXd> blocks;

  std::size_t chain_count() const { return blocks.size(); }
  std::size_t state_count() const {
    return blocks.empty() ? 0 : static_cast<std::size_t>(blocks.front().rows());
  }
};

// Projector onto the eigenvalue-1 eigenspace of a column-stochastic matrix,
// computed as the limit of the Cesaro averages A_N = (1/N) sum_{n=1..N} H^n.
//
// The averages are taken along N = 2^j via the exact doubling identities
//   A_{2N} = (A_N + H^N A_N) / 2,   H^{2N} = (H^N)^2,
// so the O(1/N) Cesaro convergence costs only O(log N) matrix products; the
// change between successive doublings is of the same order as the remaining
// error, making it a sound stopping test. `max_iter` caps the number of
// doubling steps. The result P satisfies H P = P = P H and P^2 = P up to the
// tolerance, and is itself column-stochastic.
Eigen::MatrixXd cesaro_projector(const Eigen::MatrixXd& h, double tol = 1e-10,
                                 int max_iter = 100000);

// The canonical fixed distribution of each block chain: with P_i the block's
// eigenprojector, column i is the normalization of the vector
//   u -> sum_w P_i(w,w) * P_i(u,w),
// i.e. the projector applied to its own diagonal. Returns a k x m matrix
// whose columns sum to 1. A vanishing normalization denominator is reported
// as an error.
Eigen::MatrixXd uniform_fixpoint(const ChainFamily& family, double tol = 1e-10);

// Max-norm of the per-block stationarity defect H_i * c_i - c_i, where c_i
// is the i-th column of the candidate.
double uniform_fixpoint_residual(const ChainFamily& family,
                                 const Eigen::MatrixXd& candidate);

// Whether every candidate column is fixed by its block within tol.
bool verify_uniform_fixpoint(const ChainFamily& family,
                             const Eigen::MatrixXd& candidate, double tol);

Eigen::MatrixXd to_dense(const StochasticMatrix& matrix);

// Stationary distribution of the profile chain for the given response
// concept, via the single-chain uniform fixed point.
std::vector<double> stationary_distribution(const Game& game,
                                            DistributionKind kind,
                                            double tol = 1e-10);

}
