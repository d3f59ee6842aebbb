#pragma once

#include <string>

#include "gamefix/game.hpp"
#include "gamefix/markov.hpp"

namespace gamefix {

// Line-oriented game format; `#` starts a comment anywhere on a line.
//
//   players <m>
//   moves <i> <name> ...          (one line per player)
//   payoff <move_0> ... <move_{m-1}> <p_0> ... <p_{m-1}>
//
// Move lines must precede the payoff lines that use their names; payoffs
// are decimals or p/q rationals, stored exactly. Every profile appears
// exactly once. Errors carry the offending line number.
Game parse_game(const std::string& text);
Game load_game(const std::string& path);
std::string serialize_game(const Game& game);

// Chain family format: a `blocks <k> <m>` header, then for each of the m
// blocks k lines of k entries (decimal or p/q). Each block must be
// column-stochastic within 1e-9.
ChainFamily parse_chain_family(const std::string& text);
ChainFamily load_chain_family(const std::string& path);

}
