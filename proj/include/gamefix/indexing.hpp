#pragma once

#include "gamefix/game.hpp"
#include "gamefix/relation.hpp"

namespace gamefix {

// The game's canonical indexed sets: full profiles (lexicographic), one
// player's opponent profiles, and one player's moves. These fix the
// row/column orders used by every relation and matrix in the library.
IndexedSet profile_set(const Game& game);
IndexedSet opponent_profile_set(const Game& game, int player);
IndexedSet move_set(const Game& game, int player);

}
