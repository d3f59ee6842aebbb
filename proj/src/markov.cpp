#include "gamefix/markov.hpp"

#include <cmath>

#include "gamefix/errors.hpp"

namespace gamefix {

namespace {

void check_stochastic(const Eigen::MatrixXd& h) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw DomainError("expected a non-empty square matrix");
  }
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    double sum = h.col(c).sum();
    if (std::abs(sum - 1.0) > 1e-12) {
      throw DomainError("column " + std::to_string(c) + " sums to " +
                        format_double(sum) + ", expected 1");
    }
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      if (h(r, c) < -1e-12 || !std::isfinite(h(r, c))) {
        throw DomainError("matrix entry (" + std::to_string(r) + "," +
                          std::to_string(c) + ") is not a probability");
      }
    }
  }
}

}  // namespace

Eigen::MatrixXd cesaro_projector(const Eigen::MatrixXd& h, double tol,
                                 int max_iter) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  check_stochastic(h);

  Eigen::MatrixXd average = h;  // A_N with N = 1
  Eigen::MatrixXd power = h;    // H^N
  for (int step = 0; step < max_iter; ++step) {
    Eigen::MatrixXd doubled = 0.5 * (average + power * average);
    if (!doubled.allFinite()) {
      throw ConvergenceError("eigenprojector iteration diverged");
    }
    double change = (doubled - average).cwiseAbs().maxCoeff();
    if (change < tol) return doubled;
    power = power * power;
    // Re-normalize the columns: rounding drift in repeated squaring compounds
    // multiplicatively and would otherwise blow the power up or flush it to
    // zero long before slowly mixing chains have averaged out.
    Eigen::RowVectorXd sums = power.colwise().sum();
    if (sums.minCoeff() <= 0 || !sums.allFinite()) {
      throw ConvergenceError("eigenprojector iteration diverged");
    }
    power.array().rowwise() /= sums.array();
    average = std::move(doubled);
  }
  throw ConvergenceError("eigenprojector did not converge within " +
                         std::to_string(max_iter) + " doubling steps");
}

Eigen::MatrixXd uniform_fixpoint(const ChainFamily& family, double tol) {
  if (family.chain_count() == 0) throw DomainError("empty chain family");
  std::size_t k = family.state_count();
  for (const auto& block : family.blocks) {
    if (block.rows() != static_cast<Eigen::Index>(k) ||
        block.cols() != static_cast<Eigen::Index>(k)) {
      throw DomainError("chain family blocks must share one square shape");
    }
  }

  Eigen::MatrixXd result(k, family.chain_count());
  for (std::size_t i = 0; i < family.chain_count(); ++i) {
    Eigen::MatrixXd projector = cesaro_projector(family.blocks[i], tol);
    Eigen::VectorXd weights = projector * projector.diagonal();
    double denominator = weights.sum();
    if (!(denominator > 1e-6)) {
      throw DomainError("degenerate projector: renormalization denominator " +
                        format_double(denominator) + " in block " +
                        std::to_string(i));
    }
    result.col(static_cast<Eigen::Index>(i)) = weights / denominator;
  }
  return result;
}

double uniform_fixpoint_residual(const ChainFamily& family,
                                 const Eigen::MatrixXd& candidate) {
  if (family.chain_count() == 0) throw DomainError("empty chain family");
  if (candidate.rows() != static_cast<Eigen::Index>(family.state_count()) ||
      candidate.cols() != static_cast<Eigen::Index>(family.chain_count())) {
    throw DomainError("candidate shape does not match the chain family");
  }
  double residual = 0.0;
  for (std::size_t i = 0; i < family.chain_count(); ++i) {
    Eigen::VectorXd column = candidate.col(static_cast<Eigen::Index>(i));
    Eigen::VectorXd defect = family.blocks[i] * column - column;
    residual = std::max(residual, defect.cwiseAbs().maxCoeff());
  }
  return residual;
}

bool verify_uniform_fixpoint(const ChainFamily& family,
                             const Eigen::MatrixXd& candidate, double tol) {
  return uniform_fixpoint_residual(family, candidate) < tol;
}

Eigen::MatrixXd to_dense(const StochasticMatrix& matrix) {
  Eigen::MatrixXd out(matrix.rows(), matrix.cols());
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          to_double(matrix.at(r, c));
    }
  }
  return out;
}

std::vector<double> stationary_distribution(const Game& game,
                                            DistributionKind kind, double tol) {
  ChainFamily family;
  family.blocks.push_back(to_dense(profile_chain(game, kind)));
  Eigen::MatrixXd fixed = uniform_fixpoint(family, tol);
  std::vector<double> out(static_cast<std::size_t>(fixed.rows()));
  for (Eigen::Index r = 0; r < fixed.rows(); ++r) {
    out[static_cast<std::size_t>(r)] = fixed(r, 0);
  }
  return out;
}

}
