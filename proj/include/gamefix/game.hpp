#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gamefix/rational.hpp"

namespace gamefix {

// One move index per player, in player order.
struct Profile {
  std::vector<int> moves;

  bool operator==(const Profile&) const = default;
};

// Moves of everyone except one fixed player, in increasing player order.
using OpponentProfile = std::vector<int>;

// A finite game in normal form: m >= 1 players, a non-empty move set per
// player, and an exact rational payoff vector for every move profile.
//
// Profiles are linearized lexicographically with player 0 most significant;
// that order is the canonical row/column order used everywhere else in the
// library (relations, stochastic matrices, CLI output).
class Game {
 public:
  // Validates and builds a game from an explicit payoff table. Throws
  // DomainError when a profile is missing or duplicated, arities disagree,
  // move names clash within a player, or any index is out of range.
  Game(std::vector<std::vector<std::string>> move_sets,
       const std::vector<std::pair<Profile, std::vector<Rational>>>& table);

  // Convenience: payoff vectors listed in lexicographic profile order.
  static Game from_lexicographic(std::vector<std::vector<std::string>> move_sets,
                                 std::vector<std::vector<Rational>> payoffs);

  int player_count() const { return static_cast<int>(move_sets_.size()); }
  int move_count(int player) const;
  const std::string& move_name(int player, int move) const;
  const std::vector<std::string>& move_names(int player) const;

  std::size_t profile_count() const { return payoffs_.size(); }
  std::size_t profile_index(const Profile& profile) const;
  Profile profile_at(std::size_t index) const;
  std::string profile_label(const Profile& profile) const;

  const std::vector<Rational>& payoff(const Profile& profile) const;
  const Rational& payoff(const Profile& profile, int player) const;

  // Opponent profiles of `player`, lexicographic in the remaining players'
  // move sets. For a 1-player game there is exactly one, the empty tuple.
  std::size_t opponent_profile_count(int player) const;
  std::size_t opponent_profile_index(int player, const OpponentProfile& opp) const;
  OpponentProfile opponent_profile_at(int player, std::size_t index) const;
  std::string opponent_profile_label(int player, const OpponentProfile& opp) const;

  Profile compose_profile(int player, int own_move, const OpponentProfile& opp) const;
  OpponentProfile drop_player(const Profile& profile, int player) const;

  // Rewrites one player's payoffs through `f`, which must be strictly
  // increasing on the values that actually occur (checked; DomainError).
  Game transform_payoffs(int player,
                         const std::function<Rational(const Rational&)>& f) const;
  // Affine special case a*x + b; requires a > 0.
  Game transform_payoffs(int player, const Rational& scale,
                         const Rational& shift) const;

 private:
  Game() = default;
  void check_player(int player) const;

  std::vector<std::vector<std::string>> move_sets_;
  std::vector<std::vector<Rational>> payoffs_;  // by linear profile index
};

// The two stock 2x2 games used throughout the tests and docs.
Game prisoners_dilemma();
Game matching_pennies();

}
