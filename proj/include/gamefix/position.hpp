#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gamefix/distributions.hpp"
#include "gamefix/game.hpp"

namespace gamefix {

// The three position shapes used by the built-in games: the last profile
// played, the full history of profiles (most recent first), or the players'
// cumulative gains.
using History = std::vector<Profile>;
using Gains = std::vector<Rational>;
using Position = std::variant<Profile, History, Gains>;

enum class PositionKind { LastProfile, FullHistory, CumulativeGains };

// A stateful game: a base game for moves plus a per-round payoff map and a
// position update map. For cumulative-gain games the two maps coincide (the
// new gains are the round's payoff).
class PositionGame {
 public:
  using PayoffFn =
      std::function<std::vector<Rational>(const Profile&, const Position&)>;
  using UpdateFn = std::function<Position(const Profile&, const Position&)>;

  PositionGame(Game base, PositionKind kind, PayoffFn payoff, UpdateFn update);

  const Game& base() const { return base_; }
  PositionKind kind() const { return kind_; }

  std::vector<Rational> payoff(const Profile& profile, const Position& position) const;
  Position update(const Profile& profile, const Position& position) const;

  // Checks that the position's shape matches this game's kind.
  void check_position(const Position& position) const;

 private:
  Game base_;
  PositionKind kind_;
  PayoffFn payoff_;
  UpdateFn update_;
};

// Prisoner's dilemma with the last profile as position.
PositionGame last_profile_pd();
// Prisoner's dilemma over full histories: update prepends the profile.
PositionGame iterated_pd();
// Prisoner's dilemma with 50% inflation: positions are cumulative gains and
// rho_i(s, x) = base_i(s) + x_i / 2, which is also the position update.
PositionGame inflation_pd();
// Any game as a cumulative-gain position game with a trivial update; the
// position is carried along unchanged.
PositionGame embed_stateless(Game base);

// A player's strategy: exactly one of the two callables is set. Stochastic
// strategies additionally receive the previously played profile when the
// position itself does not record one (absent on the first round).
struct PositionStrategy {
  int player = 0;
  std::function<int(const Position&)> deterministic;
  std::function<Distribution(const Position&, const std::optional<Profile>&)>
      stochastic;
};

// Repeats the opponent's last move; defined on profile and history positions
// of 2-player games.
PositionStrategy tit_for_tat(int player);

// Plays the constructive response distribution: against the opponent's last
// move, using the position-sensitive matrix on cumulative-gain games and the
// stateless one otherwise. With no last move recorded, plays uniformly.
PositionStrategy cd_strategy(const PositionGame& game, int player);

struct TrajectoryStep {
  Position position;  // before the round's moves
  Profile profile;
  std::vector<Rational> payoff;
  std::vector<Rational> cumulative;  // after this round
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  std::vector<Rational> cumulative;  // final totals, zeros for empty runs
};

// Plays `rounds` rounds from `init`. Stochastic strategies draw from a
// generator seeded with `seed`; the run is deterministic given its inputs.
// On cumulative-gain games the reported cumulative payoff IS the round
// payoff (the game already accumulates); otherwise it is the running sum.
Trajectory simulate(const PositionGame& game,
                    const std::vector<PositionStrategy>& strategies,
                    Position init, int rounds, std::uint64_t seed);

// One line per round: `round <n> <moves...> <payoffs...> <cumulative...>`,
// moves by name, numbers as exact rationals.
std::string export_trajectory(const Game& base, const Trajectory& trajectory);

// The position-sensitive constructive response matrix A_{-i} -> A_i at
// cumulative gains x. The base payoff and the improvement gap are taken at
// x; the deterrence factors at the position reached by the deviation.
// Exact rational output.
StochasticMatrix position_cd(const PositionGame& game, int player,
                             const Gains& position);

struct DistributionStep {
  std::vector<double> position;      // expected cumulative gains
  std::vector<double> distribution;  // over profiles, lexicographic order
};

struct DistributionTrace {
  std::vector<DistributionStep> steps;  // step 0 is the initial pair
  bool converged = false;
};

// Mean-field iteration of the position-dependent constructive dynamics:
// each round pushes the profile distribution through the kernel assembled
// from position_cd at the current expected position, then moves the
// expected position by the distribution-weighted update. Stops early once
// successive distributions differ by less than 1e-9 in max norm (converged
// = true) or after `rounds` rounds (false).
DistributionTrace iterate_position_distribution(const PositionGame& game,
                                                int rounds,
                                                const Gains& init_position,
                                                const Distribution& init_dist);

// 11 / 2^rounds: the defector's remaining cumulative advantage in
// inflation_pd after everyone defects for `rounds` further rounds.
Rational defection_advantage(int rounds_after_defection);

}
