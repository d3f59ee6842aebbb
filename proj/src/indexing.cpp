#include "gamefix/indexing.hpp"

namespace gamefix {

IndexedSet profile_set(const Game& game) {
  IndexedSet set;
  set.labels.reserve(game.profile_count());
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    set.labels.push_back(game.profile_label(game.profile_at(s)));
  }
  return set;
}

IndexedSet opponent_profile_set(const Game& game, int player) {
  IndexedSet set;
  set.labels.reserve(game.opponent_profile_count(player));
  for (std::size_t o = 0; o < game.opponent_profile_count(player); ++o) {
    set.labels.push_back(
        game.opponent_profile_label(player, game.opponent_profile_at(player, o)));
  }
  return set;
}

IndexedSet move_set(const Game& game, int player) {
  return IndexedSet{game.move_names(player)};
}

}
