#pragma once

#include <string>
#include <vector>

#include "gamefix/game.hpp"
#include "gamefix/indexing.hpp"
#include "gamefix/relation.hpp"

namespace gamefix {

// A probability distribution with exact rational weights.
struct Distribution {
  IndexedSet support;
  std::vector<Rational> weights;  // non-negative, sum exactly 1
};

// Divides the values by their sum. A zero-sum vector yields the uniform
// distribution, so induced matrices stay stochastic even on all-zero
// payoff columns. Negative entries are rejected.
Distribution normalize(IndexedSet support, std::vector<Rational> values);

// A column-stochastic matrix over named index sets: column = source element,
// row = target element, every column sums to 1 exactly.
class StochasticMatrix {
 public:
  // Validates: one column per source element, each of target size, entries
  // >= 0 and summing to exactly 1.
  static StochasticMatrix from_columns(IndexedSet source, IndexedSet target,
                                       std::vector<std::vector<Rational>> columns);

  const IndexedSet& source() const { return source_; }
  const IndexedSet& target() const { return target_; }
  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }

  const Rational& at(std::size_t row, std::size_t col) const;
  std::vector<Rational> column(std::size_t col) const;

  bool operator==(const StochasticMatrix& other) const;

 private:
  StochasticMatrix() = default;

  IndexedSet source_;
  IndexedSet target_;
  std::vector<Rational> entries_;  // [row * cols + col]
};

// The four stochastic response operators. Each returns the matrix
// A_{-i} -> A_i whose column against s_{-i} weighs player i's replies.
enum class DistributionKind { Bd, Sd, Ud, Cd };

// Payoff-proportional replies. Requires rho_i >= 0 everywhere.
StochasticMatrix bd(const Game& game, int player);
// Weighs each reply by its payoff here times its total payoff across all
// opponent profiles. Requires rho_i >= 0.
StochasticMatrix sd(const Game& game, int player);
// Like sd but each alternative opponent profile is weighted by the
// opponent's own payoff there. Requires all payoffs >= 0 and 2 players.
StochasticMatrix ud(const Game& game, int player);
// Adds to each reply's payoff the best deviation gap discounted by the
// opponent countermoves that punish the deviation. Requires all payoffs
// >= 0 and 2 players.
StochasticMatrix cd(const Game& game, int player);
StochasticMatrix response_distribution(const Game& game, int player,
                                       DistributionKind kind);

// Per-player matrices multiplied into a Markov chain on full profiles:
// the transition s -> t has probability prod_i M_i[t_i | s_{-i}].
StochasticMatrix profile_chain(const Game& game, DistributionKind kind);

}
