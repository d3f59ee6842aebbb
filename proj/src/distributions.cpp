#include "gamefix/distributions.hpp"

#include <algorithm>

#include "gamefix/errors.hpp"

namespace gamefix {

Distribution normalize(IndexedSet support, std::vector<Rational> values) {
  if (support.size() == 0 || values.size() != support.size()) {
    throw DomainError("normalize needs one value per support element");
  }
  Rational sum(0);
  for (const Rational& v : values) {
    if (v < 0) {
      throw DomainError("cannot normalize a negative entry: " + format_rational(v));
    }
    sum += v;
  }
  Distribution out;
  out.support = std::move(support);
  if (sum == 0) {
    out.weights.assign(values.size(), Rational(BigInt(1), BigInt(values.size())));
  } else {
    out.weights.reserve(values.size());
    for (const Rational& v : values) out.weights.push_back(v / sum);
  }
  return out;
}

StochasticMatrix StochasticMatrix::from_columns(
    IndexedSet source, IndexedSet target,
    std::vector<std::vector<Rational>> columns) {
  if (columns.size() != source.size()) {
    throw DomainError("expected one column per source element");
  }
  StochasticMatrix out;
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  out.entries_.assign(out.rows() * out.cols(), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != out.rows()) {
      throw DomainError("column " + std::to_string(c) + " has wrong height");
    }
    Rational sum(0);
    for (std::size_t r = 0; r < out.rows(); ++r) {
      const Rational& v = columns[c][r];
      if (v < 0) {
        throw DomainError("negative probability in column " + std::to_string(c));
      }
      sum += v;
      out.entries_[r * out.cols() + c] = v;
    }
    if (sum != 1) {
      throw DomainError("column " + std::to_string(c) + " sums to " +
                        format_rational(sum) + ", expected 1");
    }
  }
  return out;
}

const Rational& StochasticMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols()) {
    throw DomainError("matrix index out of range");
  }
  return entries_[row * cols() + col];
}

std::vector<Rational> StochasticMatrix::column(std::size_t col) const {
  std::vector<Rational> out;
  out.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, col));
  return out;
}

bool StochasticMatrix::operator==(const StochasticMatrix& other) const {
  return rows() == other.rows() && cols() == other.cols() &&
         entries_ == other.entries_;
}

namespace {

void require_nonnegative(const Game& game, int player, const char* op) {
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    const Rational& v = game.payoff(game.profile_at(s), player);
    if (v < 0) {
      throw DomainError(std::string(op) + " needs non-negative payoffs; player " +
                        std::to_string(player) + " has " + format_rational(v) +
                        " at profile " + game.profile_label(game.profile_at(s)));
    }
  }
}

void require_two_players(const Game& game, const char* op) {
  if (game.player_count() != 2) {
    throw DomainError(std::string(op) + " is defined for 2-player games only");
  }
}

// Assembles the A_{-i} -> A_i matrix from a per-(column, row) weight rule.
template <typename Weight>
StochasticMatrix build_response(const Game& game, int player, Weight weight) {
  IndexedSet source = opponent_profile_set(game, player);
  IndexedSet target = move_set(game, player);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(source.size());
  for (std::size_t o = 0; o < source.size(); ++o) {
    OpponentProfile opp = game.opponent_profile_at(player, o);
    std::vector<Rational> values;
    values.reserve(target.size());
    for (int s = 0; s < game.move_count(player); ++s) {
      values.push_back(weight(opp, s));
    }
    columns.push_back(normalize(target, std::move(values)).weights);
  }
  return StochasticMatrix::from_columns(std::move(source), std::move(target),
                                        std::move(columns));
}

}  // namespace

StochasticMatrix bd(const Game& game, int player) {
  require_nonnegative(game, player, "bd");
  return build_response(game, player, [&](const OpponentProfile& opp, int s) {
    return game.payoff(game.compose_profile(player, s, opp), player);
  });
}

StochasticMatrix sd(const Game& game, int player) {
  require_nonnegative(game, player, "sd");
  return build_response(game, player, [&](const OpponentProfile& opp, int s) {
    const Rational& here = game.payoff(game.compose_profile(player, s, opp), player);
    Rational total(0);
    for (std::size_t t = 0; t < game.opponent_profile_count(player); ++t) {
      total += game.payoff(
          game.compose_profile(player, s, game.opponent_profile_at(player, t)),
          player);
    }
    return here * total;
  });
}

StochasticMatrix ud(const Game& game, int player) {
  require_two_players(game, "ud");
  require_nonnegative(game, 0, "ud");
  require_nonnegative(game, 1, "ud");
  int other = 1 - player;
  return build_response(game, player, [&](const OpponentProfile& opp, int s) {
    const Rational& here = game.payoff(game.compose_profile(player, s, opp), player);
    Rational total(0);
    for (std::size_t t = 0; t < game.opponent_profile_count(player); ++t) {
      Profile alt =
          game.compose_profile(player, s, game.opponent_profile_at(player, t));
      total += game.payoff(alt, player) * game.payoff(alt, other);
    }
    return here * total;
  });
}

StochasticMatrix cd(const Game& game, int player) {
  require_two_players(game, "cd");
  require_nonnegative(game, 0, "cd");
  require_nonnegative(game, 1, "cd");
  int other = 1 - player;
  return build_response(game, player, [&](const OpponentProfile& opp, int s) {
    const Rational& here = game.payoff(game.compose_profile(player, s, opp), player);
    // Best deviation bonus: the improvement gap times the punishment mass
    // the opponent can credibly inflict on the deviator.
    Rational best(0);
    for (int t = 0; t < game.move_count(player); ++t) {
      Profile deviation = game.compose_profile(player, t, opp);
      Rational gap = positive_part(game.payoff(deviation, player) - here);
      if (gap == 0) continue;
      Rational threat(0);
      for (std::size_t c = 0; c < game.opponent_profile_count(player); ++c) {
        Profile counter =
            game.compose_profile(player, t, game.opponent_profile_at(player, c));
        threat += positive_part(game.payoff(counter, other) -
                                game.payoff(deviation, other)) *
                  positive_part(here - game.payoff(counter, player));
      }
      Rational bonus = gap * threat;
      if (bonus > best) best = bonus;
    }
    return here + best;
  });
}

StochasticMatrix response_distribution(const Game& game, int player,
                                       DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Bd:
      return bd(game, player);
    case DistributionKind::Sd:
      return sd(game, player);
    case DistributionKind::Ud:
      return ud(game, player);
    case DistributionKind::Cd:
      return cd(game, player);
  }
  throw DomainError("unknown distribution kind");
}

StochasticMatrix profile_chain(const Game& game, DistributionKind kind) {
  std::vector<StochasticMatrix> parts;
  parts.reserve(static_cast<std::size_t>(game.player_count()));
  for (int i = 0; i < game.player_count(); ++i) {
    parts.push_back(response_distribution(game, i, kind));
  }
  IndexedSet profiles = profile_set(game);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(profiles.size());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Profile from = game.profile_at(s);
    std::vector<std::size_t> contexts(
        static_cast<std::size_t>(game.player_count()));
    for (int i = 0; i < game.player_count(); ++i) {
      contexts[static_cast<std::size_t>(i)] =
          game.opponent_profile_index(i, game.drop_player(from, i));
    }
    std::vector<Rational> column;
    column.reserve(profiles.size());
    for (std::size_t t = 0; t < game.profile_count(); ++t) {
      Profile to = game.profile_at(t);
      Rational p(1);
      for (int i = 0; i < game.player_count(); ++i) {
        p *= parts[static_cast<std::size_t>(i)].at(
            static_cast<std::size_t>(to.moves[i]),
            contexts[static_cast<std::size_t>(i)]);
      }
      column.push_back(p);
    }
    columns.push_back(std::move(column));
  }
  return StochasticMatrix::from_columns(profiles, profiles, std::move(columns));
}

}
