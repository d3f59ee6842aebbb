#pragma once

#include <string>
#include <vector>

#include "gamefix/game.hpp"
#include "gamefix/indexing.hpp"
#include "gamefix/relation.hpp"

namespace gamefix {

// The four response concepts. Each induces, for every player i, a relation
// from opponent profiles A_{-i} to own moves A_i saying which own moves are
// acceptable replies.
enum class ResponseKind {
  BestResponse,         // payoff-maximal against the opponent profile
  StableResponse,       // best response robust to vanishing opponent mixtures
  UniformResponse,      // best against every opponent profile that best-responds back
  ConstructiveResponse  // every profitable deviation is deterred by a
                        // credible counter-move (2-player, 2 players only)
};

struct ResponseRelation {
  int player = 0;
  ResponseKind kind = ResponseKind::BestResponse;
  Relation rel;  // source: opponent profiles of `player`, target: own moves
};

ResponseRelation best_response(const Game& game, int player);
ResponseRelation stable_response(const Game& game, int player);
ResponseRelation uniform_response(const Game& game, int player);
// Requires a 2-player game.
ResponseRelation constructive_response(const Game& game, int player);
ResponseRelation response_relation(const Game& game, int player, ResponseKind kind);

// Moves of `player` that best-respond to every opponent profile which, in
// turn, best-responds back to them.
std::vector<int> uniform_moves(const Game& game, int player);

// One response relation per player combined into a relation A -> A on full
// profiles: s related to t iff for every i, t_i is an acceptable reply to
// s_{-i}.
struct ResponseProfile {
  std::vector<ResponseRelation> parts;
  IndexedSet profiles;
  Relation rel;  // A -> A
};

ResponseProfile response_profile(const Game& game,
                                 std::vector<ResponseRelation> parts);
ResponseProfile response_profile(const Game& game, ResponseKind kind);

// Solution concepts induced by the response kinds.
enum class EquilibriumKind { Nash, Ess, Uniform, Constructive };

ResponseKind response_kind_of(EquilibriumKind kind);

// Profiles fixed under the response profile: the strong fixed point of the
// induced relation, viewed as a trivial-state process. Lexicographic order.
std::vector<Profile> equilibria(const Game& game, EquilibriumKind kind);

// Profiles surviving the weak fixed point (iterated image refinement) of the
// response profile. Constructive is not part of this solution concept.
std::vector<Profile> rationalizable(const Game& game, EquilibriumKind kind);

}
