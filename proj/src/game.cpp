#include "gamefix/game.hpp"

#include <algorithm>
#include <set>

#include "gamefix/errors.hpp"

namespace gamefix {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Game::Game(std::vector<std::vector<std::string>> move_sets,
           const std::vector<std::pair<Profile, std::vector<Rational>>>& table) {
  if (move_sets.empty()) throw DomainError("a game needs at least one player");
  for (std::size_t i = 0; i < move_sets.size(); ++i) {
    const auto& names = move_sets[i];
    if (names.empty()) {
      throw DomainError("player " + std::to_string(i) + " has an empty move set");
    }
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) {
        throw DomainError("player " + std::to_string(i) + " has an empty move name");
      }
      if (!seen.insert(name).second) {
        throw DomainError("player " + std::to_string(i) + " repeats move name '" +
                          name + "'");
      }
    }
  }
  move_sets_ = std::move(move_sets);

  std::size_t count = 1;
  for (const auto& names : move_sets_) count *= names.size();
  payoffs_.assign(count, {});
  std::vector<bool> seen(count, false);

  for (const auto& [profile, payoff] : table) {
    std::size_t index = profile_index(profile);  // validates arity and range
    if (seen[index]) {
      throw DomainError("duplicate payoff entry for profile " +
                        profile_label(profile));
    }
    if (payoff.size() != move_sets_.size()) {
      throw DomainError("payoff vector for profile " + profile_label(profile) +
                        " has arity " + std::to_string(payoff.size()) +
                        ", expected " + std::to_string(move_sets_.size()));
    }
    seen[index] = true;
    payoffs_[index] = payoff;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) {
      throw DomainError("missing payoff entry for profile " +
                        profile_label(profile_at(i)));
    }
  }
}

Game Game::from_lexicographic(std::vector<std::vector<std::string>> move_sets,
                              std::vector<std::vector<Rational>> payoffs) {
  std::vector<std::pair<Profile, std::vector<Rational>>> table;
  Game skeleton;
  skeleton.move_sets_ = move_sets;
  std::size_t count = 1;
  for (const auto& names : move_sets) count *= names.size();
  skeleton.payoffs_.assign(count, {});
  if (payoffs.size() != count) {
    throw DomainError("expected " + std::to_string(count) + " payoff vectors, got " +
                      std::to_string(payoffs.size()));
  }
  table.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    table.emplace_back(skeleton.profile_at(i), std::move(payoffs[i]));
  }
  return Game(std::move(move_sets), table);
}

void Game::check_player(int player) const {
  if (player < 0 || player >= player_count()) {
    throw DomainError("player index " + std::to_string(player) + " out of range");
  }
}

int Game::move_count(int player) const {
  check_player(player);
  return static_cast<int>(move_sets_[player].size());
}

const std::string& Game::move_name(int player, int move) const {
  check_player(player);
  if (move < 0 || move >= move_count(player)) {
    throw DomainError("move index " + std::to_string(move) + " out of range for player " +
                      std::to_string(player));
  }
  return move_sets_[player][move];
}

const std::vector<std::string>& Game::move_names(int player) const {
  check_player(player);
  return move_sets_[player];
}

std::size_t Game::profile_index(const Profile& profile) const {
  if (profile.moves.size() != move_sets_.size()) {
    throw DomainError("profile arity " + std::to_string(profile.moves.size()) +
                      " does not match player count " +
                      std::to_string(move_sets_.size()));
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < move_sets_.size(); ++i) {
    int move = profile.moves[i];
    if (move < 0 || move >= static_cast<int>(move_sets_[i].size())) {
      throw DomainError("move index " + std::to_string(move) +
                        " out of range for player " + std::to_string(i));
    }
    index = index * move_sets_[i].size() + static_cast<std::size_t>(move);
  }
  return index;
}

Profile Game::profile_at(std::size_t index) const {
  if (index >= payoffs_.size()) {
    throw DomainError("profile index out of range");
  }
  Profile profile;
  profile.moves.assign(move_sets_.size(), 0);
  for (std::size_t i = move_sets_.size(); i-- > 0;) {
    profile.moves[i] = static_cast<int>(index % move_sets_[i].size());
    index /= move_sets_[i].size();
  }
  return profile;
}

std::string Game::profile_label(const Profile& profile) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < profile.moves.size() && i < move_sets_.size(); ++i) {
    int move = profile.moves[i];
    if (move >= 0 && move < static_cast<int>(move_sets_[i].size())) {
      names.push_back(move_sets_[i][move]);
    } else {
      names.push_back("?" + std::to_string(move));
    }
  }
  return join(names, ",");
}

const std::vector<Rational>& Game::payoff(const Profile& profile) const {
  return payoffs_[profile_index(profile)];
}

const Rational& Game::payoff(const Profile& profile, int player) const {
  check_player(player);
  return payoffs_[profile_index(profile)][static_cast<std::size_t>(player)];
}

std::size_t Game::opponent_profile_count(int player) const {
  check_player(player);
  std::size_t count = 1;
  for (std::size_t i = 0; i < move_sets_.size(); ++i) {
    if (static_cast<int>(i) != player) count *= move_sets_[i].size();
  }
  return count;
}

std::size_t Game::opponent_profile_index(int player,
                                         const OpponentProfile& opp) const {
  check_player(player);
  if (opp.size() + 1 != move_sets_.size()) {
    throw DomainError("opponent profile arity " + std::to_string(opp.size()) +
                      " does not match player count " +
                      std::to_string(move_sets_.size()));
  }
  std::size_t index = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < move_sets_.size(); ++i) {
    if (static_cast<int>(i) == player) continue;
    int move = opp[j++];
    if (move < 0 || move >= static_cast<int>(move_sets_[i].size())) {
      throw DomainError("move index " + std::to_string(move) +
                        " out of range for player " + std::to_string(i));
    }
    index = index * move_sets_[i].size() + static_cast<std::size_t>(move);
  }
  return index;
}

OpponentProfile Game::opponent_profile_at(int player, std::size_t index) const {
  check_player(player);
  if (index >= opponent_profile_count(player)) {
    throw DomainError("opponent profile index out of range");
  }
  OpponentProfile opp(move_sets_.size() - 1, 0);
  for (std::size_t i = move_sets_.size(), j = opp.size(); i-- > 0;) {
    if (static_cast<int>(i) == player) continue;
    --j;
    opp[j] = static_cast<int>(index % move_sets_[i].size());
    index /= move_sets_[i].size();
  }
  return opp;
}

std::string Game::opponent_profile_label(int player,
                                         const OpponentProfile& opp) const {
  check_player(player);
  if (opp.empty()) return "()";
  std::vector<std::string> names;
  std::size_t j = 0;
  for (std::size_t i = 0; i < move_sets_.size(); ++i) {
    if (static_cast<int>(i) == player) continue;
    int move = opp[j++];
    if (move >= 0 && move < static_cast<int>(move_sets_[i].size())) {
      names.push_back(move_sets_[i][move]);
    } else {
      names.push_back("?" + std::to_string(move));
    }
  }
  return join(names, ",");
}

Profile Game::compose_profile(int player, int own_move,
                              const OpponentProfile& opp) const {
  check_player(player);
  if (opp.size() + 1 != move_sets_.size()) {
    throw DomainError("opponent profile arity does not match player count");
  }
  Profile profile;
  profile.moves.reserve(move_sets_.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < move_sets_.size(); ++i) {
    profile.moves.push_back(static_cast<int>(i) == player ? own_move : opp[j++]);
  }
  profile_index(profile);  // range check
  return profile;
}

OpponentProfile Game::drop_player(const Profile& profile, int player) const {
  check_player(player);
  if (profile.moves.size() != move_sets_.size()) {
    throw DomainError("profile arity does not match player count");
  }
  OpponentProfile opp;
  opp.reserve(move_sets_.size() - 1);
  for (std::size_t i = 0; i < profile.moves.size(); ++i) {
    if (static_cast<int>(i) != player) opp.push_back(profile.moves[i]);
  }
  return opp;
}

Game Game::transform_payoffs(
    int player, const std::function<Rational(const Rational&)>& f) const {
  check_player(player);
  std::set<Rational> values;
  for (const auto& payoff : payoffs_) {
    values.insert(payoff[static_cast<std::size_t>(player)]);
  }
  const Rational* prev = nullptr;
  Rational prev_image;
  for (const Rational& v : values) {  // std::set iterates in increasing order
    Rational image = f(v);
    if (prev && !(prev_image < image)) {
      throw DomainError("payoff transform is not strictly increasing between " +
                        format_rational(*prev) + " and " + format_rational(v));
    }
    prev = &v;
    prev_image = image;
  }

  Game result = *this;
  for (auto& payoff : result.payoffs_) {
    payoff[static_cast<std::size_t>(player)] =
        f(payoff[static_cast<std::size_t>(player)]);
  }
  return result;
}

Game Game::transform_payoffs(int player, const Rational& scale,
                             const Rational& shift) const {
  if (scale <= 0) {
    throw DomainError("affine payoff transform needs a positive scale, got " +
                      format_rational(scale));
  }
  return transform_payoffs(
      player, [&](const Rational& v) { return scale * v + shift; });
}

Game prisoners_dilemma() {
  Rational r0(10), r1(0), r2(11), r3(1);
  return Game::from_lexicographic(
      {{"c", "d"}, {"c", "d"}},
      {{r0, r0}, {r1, r2}, {r2, r1}, {r3, r3}});
}

Game matching_pennies() {
  Rational one(1), zero(0);
  return Game::from_lexicographic(
      {{"H", "T"}, {"H", "T"}},
      {{one, zero}, {zero, one}, {zero, one}, {one, zero}});
}

}
