#include "gamefix/responses.hpp"

#include <algorithm>

#include "gamefix/errors.hpp"

namespace gamefix {

namespace {

// own is a payoff-maximal reply to the opponent profile.
bool is_best_reply(const Game& game, int player, const OpponentProfile& opp,
                   int own) {
  const Rational& value = game.payoff(game.compose_profile(player, own, opp), player);
  for (int t = 0; t < game.move_count(player); ++t) {
    if (game.payoff(game.compose_profile(player, t, opp), player) > value) {
      return false;
    }
  }
  return true;
}

// Reciprocal best-reply check: when player `player` plays
// `own` and the others play per `opp`, every other player's component is a
// best reply to what they see.
bool opponents_best_reply(const Game& game,
                          const std::vector<ResponseRelation>& best, int player,
                          int own, const OpponentProfile& opp) {
  Profile whole = game.compose_profile(player, own, opp);
  for (int k = 0; k < game.player_count(); ++k) {
    if (k == player) continue;
    std::size_t seen = game.opponent_profile_index(k, game.drop_player(whole, k));
    if (!best[static_cast<std::size_t>(k)].rel.relates(
            seen, static_cast<std::size_t>(whole.moves[k]))) {
      return false;
    }
  }
  return true;
}

ResponseRelation make_response(const Game& game, int player, ResponseKind kind) {
  ResponseRelation out;
  out.player = player;
  out.kind = kind;
  out.rel = Relation(opponent_profile_set(game, player), move_set(game, player));
  return out;
}

}  // namespace

ResponseRelation best_response(const Game& game, int player) {
  ResponseRelation out = make_response(game, player, ResponseKind::BestResponse);
  for (std::size_t o = 0; o < game.opponent_profile_count(player); ++o) {
    OpponentProfile opp = game.opponent_profile_at(player, o);
    for (int s = 0; s < game.move_count(player); ++s) {
      if (is_best_reply(game, player, opp, s)) {
        out.rel.set(o, static_cast<std::size_t>(s));
      }
    }
  }
  return out;
}

ResponseRelation stable_response(const Game& game, int player) {
  ResponseRelation out = make_response(game, player, ResponseKind::StableResponse);
  for (std::size_t o = 0; o < game.opponent_profile_count(player); ++o) {
    OpponentProfile opp = game.opponent_profile_at(player, o);
    for (int s = 0; s < game.move_count(player); ++s) {
      if (!is_best_reply(game, player, opp, s)) continue;
      const Rational& here =
          game.payoff(game.compose_profile(player, s, opp), player);
      // Any move tying against opp must be weakly dominated by s everywhere.
      bool stable = true;
      for (int t = 0; t < game.move_count(player) && stable; ++t) {
        if (game.payoff(game.compose_profile(player, t, opp), player) != here) {
          continue;
        }
        for (std::size_t o2 = 0; o2 < game.opponent_profile_count(player); ++o2) {
          OpponentProfile other = game.opponent_profile_at(player, o2);
          if (game.payoff(game.compose_profile(player, t, other), player) >
              game.payoff(game.compose_profile(player, s, other), player)) {
            stable = false;
            break;
          }
        }
      }
      if (stable) out.rel.set(o, static_cast<std::size_t>(s));
    }
  }
  return out;
}

ResponseRelation uniform_response(const Game& game, int player) {
  ResponseRelation out = make_response(game, player, ResponseKind::UniformResponse);
  std::vector<ResponseRelation> best;
  best.reserve(static_cast<std::size_t>(game.player_count()));
  for (int k = 0; k < game.player_count(); ++k) {
    best.push_back(best_response(game, k));
  }
  for (std::size_t o = 0; o < game.opponent_profile_count(player); ++o) {
    OpponentProfile opp = game.opponent_profile_at(player, o);
    for (int s = 0; s < game.move_count(player); ++s) {
      if (!best[static_cast<std::size_t>(player)].rel.relates(
              o, static_cast<std::size_t>(s))) {
        continue;
      }
      bool uniform = true;
      for (std::size_t t = 0;
           t < game.opponent_profile_count(player) && uniform; ++t) {
        OpponentProfile reply = game.opponent_profile_at(player, t);
        if (opponents_best_reply(game, best, player, s, reply) &&
            !best[static_cast<std::size_t>(player)].rel.relates(
                t, static_cast<std::size_t>(s))) {
          uniform = false;
        }
      }
      if (uniform) out.rel.set(o, static_cast<std::size_t>(s));
    }
  }
  return out;
}

ResponseRelation constructive_response(const Game& game, int player) {
  if (game.player_count() != 2) {
    throw DomainError("constructive responses are defined for 2-player games only");
  }
  int other = 1 - player;
  ResponseRelation out =
      make_response(game, player, ResponseKind::ConstructiveResponse);
  for (std::size_t o = 0; o < game.opponent_profile_count(player); ++o) {
    OpponentProfile opp = game.opponent_profile_at(player, o);
    for (int s = 0; s < game.move_count(player); ++s) {
      const Rational& here =
          game.payoff(game.compose_profile(player, s, opp), player);
      // Every strictly better deviation t must invite a countermove that the
      // opponent prefers and that leaves t worse off than s was.
      bool kept = true;
      for (int t = 0; t < game.move_count(player) && kept; ++t) {
        Profile deviation = game.compose_profile(player, t, opp);
        if (game.payoff(deviation, player) <= here) continue;
        bool deterred = false;
        for (std::size_t c = 0; c < game.opponent_profile_count(player); ++c) {
          Profile counter =
              game.compose_profile(player, t, game.opponent_profile_at(player, c));
          if (game.payoff(counter, other) > game.payoff(deviation, other) &&
              game.payoff(counter, player) < here) {
            deterred = true;
            break;
          }
        }
        kept = deterred;
      }
      if (kept) out.rel.set(o, static_cast<std::size_t>(s));
    }
  }
  return out;
}

ResponseRelation response_relation(const Game& game, int player,
                                   ResponseKind kind) {
  switch (kind) {
    case ResponseKind::BestResponse:
      return best_response(game, player);
    case ResponseKind::StableResponse:
      return stable_response(game, player);
    case ResponseKind::UniformResponse:
      return uniform_response(game, player);
    case ResponseKind::ConstructiveResponse:
      return constructive_response(game, player);
  }
  throw DomainError("unknown response kind");
}

std::vector<int> uniform_moves(const Game& game, int player) {
  std::vector<ResponseRelation> best;
  best.reserve(static_cast<std::size_t>(game.player_count()));
  for (int k = 0; k < game.player_count(); ++k) {
    best.push_back(best_response(game, k));
  }
  std::vector<int> out;
  for (int s = 0; s < game.move_count(player); ++s) {
    bool uniform = true;
    for (std::size_t t = 0; t < game.opponent_profile_count(player) && uniform;
         ++t) {
      OpponentProfile reply = game.opponent_profile_at(player, t);
      if (opponents_best_reply(game, best, player, s, reply) &&
          !best[static_cast<std::size_t>(player)].rel.relates(
              t, static_cast<std::size_t>(s))) {
        uniform = false;
      }
    }
    if (uniform) out.push_back(s);
  }
  return out;
}

ResponseProfile response_profile(const Game& game,
                                 std::vector<ResponseRelation> parts) {
  if (parts.size() != static_cast<std::size_t>(game.player_count())) {
    throw DomainError("need exactly one response relation per player");
  }
  for (int i = 0; i < game.player_count(); ++i) {
    const auto& part = parts[static_cast<std::size_t>(i)];
    if (part.player != i ||
        part.rel.source().size() != game.opponent_profile_count(i) ||
        part.rel.target().size() != static_cast<std::size_t>(game.move_count(i))) {
      throw DomainError("response relation " + std::to_string(i) +
                        " does not match the game's move sets");
    }
  }

  ResponseProfile out;
  out.profiles = profile_set(game);
  out.rel = Relation(out.profiles, out.profiles);
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Profile from = game.profile_at(s);
    std::vector<std::size_t> contexts(
        static_cast<std::size_t>(game.player_count()));
    for (int i = 0; i < game.player_count(); ++i) {
      contexts[static_cast<std::size_t>(i)] =
          game.opponent_profile_index(i, game.drop_player(from, i));
    }
    for (std::size_t t = 0; t < game.profile_count(); ++t) {
      Profile to = game.profile_at(t);
      bool related = true;
      for (int i = 0; i < game.player_count(); ++i) {
        if (!parts[static_cast<std::size_t>(i)].rel.relates(
                contexts[static_cast<std::size_t>(i)],
                static_cast<std::size_t>(to.moves[i]))) {
          related = false;
          break;
        }
      }
      if (related) out.rel.set(s, t);
    }
  }
  out.parts = std::move(parts);
  return out;
}

ResponseProfile response_profile(const Game& game, ResponseKind kind) {
  std::vector<ResponseRelation> parts;
  parts.reserve(static_cast<std::size_t>(game.player_count()));
  for (int i = 0; i < game.player_count(); ++i) {
    parts.push_back(response_relation(game, i, kind));
  }
  return response_profile(game, std::move(parts));
}

ResponseKind response_kind_of(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::Nash:
      return ResponseKind::BestResponse;
    case EquilibriumKind::Ess:
      return ResponseKind::StableResponse;
    case EquilibriumKind::Uniform:
      return ResponseKind::UniformResponse;
    case EquilibriumKind::Constructive:
      return ResponseKind::ConstructiveResponse;
  }
  throw DomainError("unknown equilibrium kind");
}

namespace {

std::vector<Profile> profiles_from_states(const Game& game, const Relation& rel) {
  std::vector<Profile> out;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    if (rel.relates(0, s)) out.push_back(game.profile_at(s));
  }
  return out;
}

}  // namespace

std::vector<Profile> equilibria(const Game& game, EquilibriumKind kind) {
  ResponseProfile rp = response_profile(game, response_kind_of(kind));
  Relation fixed = strong_fixpoint(rp.rel, rp.profiles, unit_set());
  return profiles_from_states(game, fixed);
}

std::vector<Profile> rationalizable(const Game& game, EquilibriumKind kind) {
  if (kind == EquilibriumKind::Constructive) {
    throw DomainError("rationalizability is defined for nash, ess, and uniform");
  }
  ResponseProfile rp = response_profile(game, response_kind_of(kind));
  Relation fixed = weak_fixpoint(rp.rel, rp.profiles, unit_set());
  return profiles_from_states(game, fixed);
}

}
