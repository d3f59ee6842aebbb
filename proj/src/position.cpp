#include "gamefix/position.hpp"

#include <random>
#include <sstream>

#include "gamefix/errors.hpp"
#include "gamefix/responses.hpp"

namespace gamefix {

PositionGame::PositionGame(Game base, PositionKind kind, PayoffFn payoff,
                           UpdateFn update)
    : base_(std::move(base)),
      kind_(kind),
      payoff_(std::move(payoff)),
      update_(std::move(update)) {
  if (!payoff_ || !update_) {
    throw DomainError("a position game needs both a payoff and an update map");
  }
}

void PositionGame::check_position(const Position& position) const {
  switch (kind_) {
    case PositionKind::LastProfile:
      if (const auto* p = std::get_if<Profile>(&position)) {
        base_.profile_index(*p);  // validates
        return;
      }
      throw DomainError("this game's positions are profiles");
    case PositionKind::FullHistory:
      if (const auto* h = std::get_if<History>(&position)) {
        for (const Profile& p : *h) base_.profile_index(p);
        return;
      }
      throw DomainError("this game's positions are profile histories");
    case PositionKind::CumulativeGains:
      if (const auto* g = std::get_if<Gains>(&position)) {
        if (g->size() != static_cast<std::size_t>(base_.player_count())) {
          throw DomainError("expected one cumulative gain per player");
        }
        return;
      }
      throw DomainError("this game's positions are cumulative gain vectors");
  }
  throw DomainError("unknown position kind");
}

std::vector<Rational> PositionGame::payoff(const Profile& profile,
                                           const Position& position) const {
  check_position(position);
  base_.profile_index(profile);
  return payoff_(profile, position);
}

Position PositionGame::update(const Profile& profile,
                              const Position& position) const {
  check_position(position);
  base_.profile_index(profile);
  return update_(profile, position);
}

PositionGame last_profile_pd() {
  Game base = prisoners_dilemma();
  return PositionGame(
      base, PositionKind::LastProfile,
      [base](const Profile& s, const Position&) { return base.payoff(s); },
      [](const Profile& s, const Position&) { return Position(s); });
}

PositionGame iterated_pd() {
  Game base = prisoners_dilemma();
  return PositionGame(
      base, PositionKind::FullHistory,
      [base](const Profile& s, const Position&) { return base.payoff(s); },
      [](const Profile& s, const Position& x) {
        History next = std::get<History>(x);
        next.insert(next.begin(), s);
        return Position(std::move(next));
      });
}

PositionGame inflation_pd() {
  Game base = prisoners_dilemma();
  auto gains = [base](const Profile& s, const Position& x) {
    const Gains& g = std::get<Gains>(x);
    std::vector<Rational> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.push_back(base.payoff(s, static_cast<int>(i)) + g[i] / 2);
    }
    return out;
  };
  return PositionGame(base, PositionKind::CumulativeGains, gains,
                      [gains](const Profile& s, const Position& x) {
                        return Position(Gains(gains(s, x)));
                      });
}

PositionGame embed_stateless(Game base) {
  Game copy = base;
  return PositionGame(
      std::move(base), PositionKind::CumulativeGains,
      [copy](const Profile& s, const Position&) { return copy.payoff(s); },
      [](const Profile&, const Position& x) { return x; });
}

namespace {

// The profile most recently played, as recorded by the position itself.
std::optional<Profile> recorded_profile(const Position& position) {
  if (const auto* p = std::get_if<Profile>(&position)) return *p;
  if (const auto* h = std::get_if<History>(&position)) {
    if (!h->empty()) return h->front();
  }
  return std::nullopt;
}

int opponent_move(const Profile& profile, int player) {
  return profile.moves[static_cast<std::size_t>(1 - player)];
}

Distribution uniform_over(const IndexedSet& support) {
  return normalize(support, std::vector<Rational>(support.size(), Rational(1)));
}

Distribution matrix_column(const StochasticMatrix& matrix, std::size_t col) {
  Distribution out;
  out.support = matrix.target();
  out.weights = matrix.column(col);
  return out;
}

}  // namespace

PositionStrategy tit_for_tat(int player) {
  PositionStrategy strategy;
  strategy.player = player;
  strategy.deterministic = [player](const Position& position) {
    auto last = recorded_profile(position);
    if (!last) {
      throw DomainError("tit-for-tat needs a position recording the last profile");
    }
    if (last->moves.size() != 2 || player < 0 || player > 1) {
      throw DomainError("tit-for-tat is defined for 2-player games");
    }
    return opponent_move(*last, player);
  };
  return strategy;
}

PositionStrategy cd_strategy(const PositionGame& game, int player) {
  if (game.base().player_count() != 2) {
    throw DomainError("the constructive strategy needs a 2-player game");
  }
  if (player < 0 || player > 1) {
    throw DomainError("player index out of range");
  }
  PositionStrategy strategy;
  strategy.player = player;
  if (game.kind() == PositionKind::CumulativeGains) {
    strategy.stochastic = [game, player](const Position& position,
                                         const std::optional<Profile>& last) {
      if (!last) {
        return uniform_over(move_set(game.base(), player));
      }
      StochasticMatrix matrix =
          position_cd(game, player, std::get<Gains>(position));
      return matrix_column(matrix,
                           static_cast<std::size_t>(opponent_move(*last, player)));
    };
  } else {
    StochasticMatrix matrix = cd(game.base(), player);
    strategy.stochastic = [matrix, base = game.base(), player](
                              const Position& position,
                              const std::optional<Profile>& last) {
      std::optional<Profile> seen = recorded_profile(position);
      if (!seen) seen = last;
      if (!seen) {
        return uniform_over(move_set(base, player));
      }
      return matrix_column(matrix,
                           static_cast<std::size_t>(opponent_move(*seen, player)));
    };
  }
  return strategy;
}

namespace {

// Inverse-CDF sampling with the 53-bit uniform draw compared exactly
// against the rational cumulative weights.
int sample_index(const Distribution& dist, std::mt19937_64& rng) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  Rational point(u);
  Rational acc(0);
  for (std::size_t j = 0; j < dist.weights.size(); ++j) {
    acc += dist.weights[j];
    if (point < acc) return static_cast<int>(j);
  }
  return static_cast<int>(dist.weights.size()) - 1;
}

}  // namespace

Trajectory simulate(const PositionGame& game,
                    const std::vector<PositionStrategy>& strategies,
                    Position init, int rounds, std::uint64_t seed) {
  const Game& base = game.base();
  int players = base.player_count();
  if (rounds < 0) throw DomainError("round count must be non-negative");
  if (strategies.size() != static_cast<std::size_t>(players)) {
    throw DomainError("need exactly one strategy per player");
  }
  for (int i = 0; i < players; ++i) {
    const auto& s = strategies[static_cast<std::size_t>(i)];
    if (s.player != i) {
      throw DomainError("strategy " + std::to_string(i) +
                        " is declared for player " + std::to_string(s.player));
    }
    if (static_cast<bool>(s.deterministic) == static_cast<bool>(s.stochastic)) {
      throw DomainError("a strategy must be either deterministic or stochastic");
    }
  }
  game.check_position(init);

  std::mt19937_64 rng(seed);
  Trajectory trajectory;
  trajectory.cumulative.assign(static_cast<std::size_t>(players), Rational(0));
  Position position = std::move(init);
  std::optional<Profile> last = recorded_profile(position);

  for (int round = 0; round < rounds; ++round) {
    Profile profile;
    profile.moves.reserve(static_cast<std::size_t>(players));
    for (int i = 0; i < players; ++i) {
      const auto& s = strategies[static_cast<std::size_t>(i)];
      int move;
      if (s.deterministic) {
        move = s.deterministic(position);
      } else {
        Distribution dist = s.stochastic(position, last);
        if (dist.weights.size() != static_cast<std::size_t>(base.move_count(i))) {
          throw DomainError("strategy " + std::to_string(i) +
                            " returned a distribution of the wrong size");
        }
        move = sample_index(dist, rng);
      }
      if (move < 0 || move >= base.move_count(i)) {
        throw DomainError("strategy " + std::to_string(i) +
                          " chose an out-of-range move");
      }
      profile.moves.push_back(move);
    }

    TrajectoryStep step;
    step.position = position;
    step.profile = profile;
    step.payoff = game.payoff(profile, position);
    if (game.kind() == PositionKind::CumulativeGains) {
      trajectory.cumulative = step.payoff;  // the game already accumulates
    } else {
      for (int i = 0; i < players; ++i) {
        trajectory.cumulative[static_cast<std::size_t>(i)] +=
            step.payoff[static_cast<std::size_t>(i)];
      }
    }
    step.cumulative = trajectory.cumulative;
    position = game.update(profile, position);
    last = profile;
    trajectory.steps.push_back(std::move(step));
  }
  return trajectory;
}

std::string export_trajectory(const Game& base, const Trajectory& trajectory) {
  std::ostringstream out;
  for (std::size_t n = 0; n < trajectory.steps.size(); ++n) {
    const TrajectoryStep& step = trajectory.steps[n];
    out << "round " << n;
    for (std::size_t i = 0; i < step.profile.moves.size(); ++i) {
      out << ' ' << base.move_name(static_cast<int>(i), step.profile.moves[i]);
    }
    for (const Rational& p : step.payoff) out << ' ' << format_rational(p);
    for (const Rational& c : step.cumulative) out << ' ' << format_rational(c);
    out << '\n';
  }
  return out.str();
}

StochasticMatrix position_cd(const PositionGame& game, int player,
                             const Gains& position) {
  if (game.kind() != PositionKind::CumulativeGains) {
    throw DomainError("position-sensitive cd needs a cumulative-gain game");
  }
  const Game& base = game.base();
  if (base.player_count() != 2) {
    throw DomainError("position-sensitive cd is defined for 2-player games only");
  }
  if (player < 0 || player > 1) {
    throw DomainError("player index out of range");
  }
  Position here(position);
  game.check_position(here);
  int other = 1 - player;

  IndexedSet source = opponent_profile_set(base, player);
  IndexedSet target = move_set(base, player);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(source.size());
  for (std::size_t o = 0; o < source.size(); ++o) {
    OpponentProfile opp = base.opponent_profile_at(player, o);
    std::vector<Rational> values;
    values.reserve(target.size());
    for (int s = 0; s < base.move_count(player); ++s) {
      Rational stay = game.payoff(base.compose_profile(player, s, opp),
                                  here)[static_cast<std::size_t>(player)];
      Rational best(0);
      for (int t = 0; t < base.move_count(player); ++t) {
        Profile deviation = base.compose_profile(player, t, opp);
        Rational gap = positive_part(
            game.payoff(deviation, here)[static_cast<std::size_t>(player)] - stay);
        if (gap == 0) continue;
        // Deterrence is judged at the position the deviation leads to.
        Position after = game.update(deviation, here);
        Rational deviation_other =
            game.payoff(deviation, after)[static_cast<std::size_t>(other)];
        Rational stay_after = game.payoff(base.compose_profile(player, s, opp),
                                          after)[static_cast<std::size_t>(player)];
        Rational threat(0);
        for (std::size_t c = 0; c < base.opponent_profile_count(player); ++c) {
          Profile counter = base.compose_profile(
              player, t, base.opponent_profile_at(player, c));
          std::vector<Rational> counter_pay = game.payoff(counter, after);
          threat += positive_part(counter_pay[static_cast<std::size_t>(other)] -
                                  deviation_other) *
                    positive_part(stay_after -
                                  counter_pay[static_cast<std::size_t>(player)]);
        }
        Rational bonus = gap * threat;
        if (bonus > best) best = bonus;
      }
      values.push_back(stay + best);
    }
    columns.push_back(normalize(target, std::move(values)).weights);
  }
  return StochasticMatrix::from_columns(std::move(source), std::move(target),
                                        std::move(columns));
}

DistributionTrace iterate_position_distribution(const PositionGame& game,
                                                int rounds,
                                                const Gains& init_position,
                                                const Distribution& init_dist) {
  const Game& base = game.base();
  if (game.kind() != PositionKind::CumulativeGains) {
    throw DomainError("distribution iteration needs a cumulative-gain game");
  }
  if (base.player_count() != 2) {
    throw DomainError("distribution iteration is defined for 2-player games only");
  }
  if (rounds < 0) throw DomainError("round count must be non-negative");
  game.check_position(Position(init_position));
  if (init_dist.weights.size() != base.profile_count()) {
    throw DomainError("initial distribution must range over full profiles");
  }

  std::vector<double> position;
  position.reserve(init_position.size());
  for (const Rational& g : init_position) position.push_back(to_double(g));
  std::vector<double> dist;
  dist.reserve(init_dist.weights.size());
  for (const Rational& w : init_dist.weights) dist.push_back(to_double(w));

  DistributionTrace trace;
  trace.steps.push_back({position, dist});

  for (int round = 0; round < rounds; ++round) {
    Gains exact;
    exact.reserve(position.size());
    for (double g : position) exact.emplace_back(g);
    Position here(exact);

    std::vector<StochasticMatrix> parts;
    for (int i = 0; i < base.player_count(); ++i) {
      parts.push_back(position_cd(game, i, exact));
    }

    std::vector<double> next(dist.size(), 0.0);
    for (std::size_t s = 0; s < base.profile_count(); ++s) {
      if (dist[s] == 0.0) continue;
      Profile from = base.profile_at(s);
      std::vector<std::size_t> contexts(
          static_cast<std::size_t>(base.player_count()));
      for (int i = 0; i < base.player_count(); ++i) {
        contexts[static_cast<std::size_t>(i)] =
            base.opponent_profile_index(i, base.drop_player(from, i));
      }
      for (std::size_t t = 0; t < base.profile_count(); ++t) {
        Profile to = base.profile_at(t);
        double p = 1.0;
        for (int i = 0; i < base.player_count(); ++i) {
          p *= to_double(parts[static_cast<std::size_t>(i)].at(
              static_cast<std::size_t>(to.moves[i]),
              contexts[static_cast<std::size_t>(i)]));
        }
        next[t] += p * dist[s];
      }
    }

    std::vector<double> moved(position.size(), 0.0);
    for (std::size_t t = 0; t < base.profile_count(); ++t) {
      Gains updated = std::get<Gains>(game.update(base.profile_at(t), here));
      for (std::size_t c = 0; c < moved.size(); ++c) {
        moved[c] += next[t] * to_double(updated[c]);
      }
    }

    double change = 0.0;
    for (std::size_t t = 0; t < next.size(); ++t) {
      change = std::max(change, std::abs(next[t] - dist[t]));
    }
    trace.steps.push_back({moved, next});
    dist = std::move(next);
    position = std::move(moved);
    if (change < 1e-9) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

Rational defection_advantage(int rounds_after_defection) {
  if (rounds_after_defection < 0) {
    throw DomainError("round count must be non-negative");
  }
  return Rational(BigInt(11), BigInt(1) << rounds_after_defection);
}

}
