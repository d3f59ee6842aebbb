#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gamefix/errors.hpp"
#include "gamefix/game.hpp"
#include "test_util.hpp"

using namespace gamefix;

namespace {

Game pd() { return prisoners_dilemma(); }

Profile profile(std::vector<int> moves) { return Profile{std::move(moves)}; }

}  // namespace

TEST_CASE("prisoner's dilemma payoffs") {
  Game g = pd();
  CHECK(g.player_count() == 2);
  CHECK(g.payoff(profile({0, 0})) == std::vector<Rational>{10, 10});
  CHECK(g.payoff(profile({0, 1})) == std::vector<Rational>{0, 11});
  CHECK(g.payoff(profile({1, 0})) == std::vector<Rational>{11, 0});
  CHECK(g.payoff(profile({1, 1})) == std::vector<Rational>{1, 1});
  CHECK(g.payoff(profile({0, 1}), 0) == Rational(0));
  CHECK(g.payoff(profile({0, 1}), 1) == Rational(11));
}

TEST_CASE("degenerate one-player one-move game") {
  Game g({{"only"}}, {{profile({0}), {Rational(0)}}});
  CHECK(g.profile_count() == 1);
  CHECK(g.payoff(profile({0})) == std::vector<Rational>{0});
  CHECK(g.opponent_profile_count(0) == 1);
  CHECK(g.opponent_profile_at(0, 0).empty());
  CHECK(g.opponent_profile_label(0, {}) == "()");
}

TEST_CASE("construction validates the table") {
  std::vector<std::vector<std::string>> moves{{"c", "d"}, {"c", "d"}};
  std::vector<std::pair<Profile, std::vector<Rational>>> table{
      {profile({0, 0}), {10, 10}},
      {profile({0, 1}), {0, 11}},
      {profile({1, 0}), {11, 0}},
  };
  CHECK_THROWS_WITH_AS(Game(moves, table),
                       "missing payoff entry for profile d,d", DomainError);

  auto duplicated = table;
  duplicated.emplace_back(profile({0, 0}), std::vector<Rational>{1, 1});
  duplicated.emplace_back(profile({1, 1}), std::vector<Rational>{1, 1});
  CHECK_THROWS_AS(Game(moves, duplicated), DomainError);

  auto bad_arity = table;
  bad_arity.emplace_back(profile({1, 1}), std::vector<Rational>{1});
  CHECK_THROWS_AS(Game(moves, bad_arity), DomainError);

  CHECK_THROWS_AS(Game({{"c", "d"}, {}}, table), DomainError);
  CHECK_THROWS_AS(Game({{"c", "c"}, {"c", "d"}}, table), DomainError);
  CHECK_THROWS_AS(Game({}, {}), DomainError);
}

TEST_CASE("payoff rejects out-of-range indices") {
  Game g = pd();
  CHECK_THROWS_AS(g.payoff(profile({0, 2})), DomainError);
  CHECK_THROWS_AS(g.payoff(profile({-1, 0})), DomainError);
  CHECK_THROWS_AS(g.payoff(profile({0})), DomainError);
  CHECK_THROWS_AS(g.payoff(profile({0, 0}), 2), DomainError);
}

TEST_CASE("transform_payoffs applies strictly increasing maps") {
  Game g = pd();
  Game doubled = g.transform_payoffs(0, Rational(2), Rational(1));
  CHECK(doubled.payoff(profile({0, 0}), 0) == Rational(21));
  CHECK(doubled.payoff(profile({0, 1}), 0) == Rational(1));
  CHECK(doubled.payoff(profile({1, 0}), 0) == Rational(23));
  CHECK(doubled.payoff(profile({1, 1}), 0) == Rational(3));
  // Player 1 untouched.
  for (std::size_t s = 0; s < g.profile_count(); ++s) {
    CHECK(doubled.payoff(doubled.profile_at(s), 1) ==
          g.payoff(g.profile_at(s), 1));
  }

  Game same = g.transform_payoffs(0, [](const Rational& v) { return v; });
  for (std::size_t s = 0; s < g.profile_count(); ++s) {
    CHECK(same.payoff(same.profile_at(s)) == g.payoff(g.profile_at(s)));
  }

  CHECK_THROWS_AS(g.transform_payoffs(0, Rational(-1), Rational(0)), DomainError);
  CHECK_THROWS_AS(g.transform_payoffs(0, Rational(0), Rational(5)), DomainError);
  CHECK_THROWS_AS(g.transform_payoffs(0, [](const Rational& v) { return -v; }),
                  DomainError);
}

TEST_CASE("opponent profile enumeration is lexicographic") {
  Game g = pd();
  CHECK(g.opponent_profile_count(0) == 2);
  CHECK(g.opponent_profile_at(0, 0) == OpponentProfile{0});
  CHECK(g.opponent_profile_at(0, 1) == OpponentProfile{1});

  // 3 players with 2 moves each: player 1 sees pairs (p0, p2).
  std::vector<std::vector<Rational>> payoffs(8, {0, 0, 0});
  Game three = Game::from_lexicographic({{"a", "b"}, {"a", "b"}, {"a", "b"}},
                                        std::move(payoffs));
  CHECK(three.opponent_profile_count(1) == 4);
  CHECK(three.opponent_profile_at(1, 0) == OpponentProfile{0, 0});
  CHECK(three.opponent_profile_at(1, 1) == OpponentProfile{0, 1});
  CHECK(three.opponent_profile_at(1, 2) == OpponentProfile{1, 0});
  CHECK(three.opponent_profile_at(1, 3) == OpponentProfile{1, 1});

  // Composition respects player positions.
  Profile whole = three.compose_profile(1, 1, {0, 1});
  CHECK(whole == profile({0, 1, 1}));
  CHECK(three.drop_player(whole, 1) == OpponentProfile{0, 1});
}

TEST_CASE("profile linearization round-trips") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Game g = testutil::random_game(rng);
    for (std::size_t s = 0; s < g.profile_count(); ++s) {
      CHECK(g.profile_index(g.profile_at(s)) == s);
    }
    for (int i = 0; i < g.player_count(); ++i) {
      for (std::size_t o = 0; o < g.opponent_profile_count(i); ++o) {
        CHECK(g.opponent_profile_index(i, g.opponent_profile_at(i, o)) == o);
      }
    }
  }
}

TEST_CASE("random games: payoff is total and round-trips the table") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::string>> move_sets{{"x", "y", "z"}, {"l", "r"}};
    std::vector<std::pair<Profile, std::vector<Rational>>> table;
    std::uniform_int_distribution<int> value(-9, 9);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 2; ++b) {
        table.emplace_back(profile({a, b}),
                           std::vector<Rational>{value(rng), value(rng)});
      }
    }
    Game g(move_sets, table);
    for (const auto& [p, payoff] : table) {
      CHECK(g.payoff(p) == payoff);
    }
  }
}

TEST_CASE("random transforms preserve structure") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> scale_num(1, 5);
  std::uniform_int_distribution<int> shift_num(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Game g = testutil::random_game(rng);
    std::uniform_int_distribution<int> pick(0, g.player_count() - 1);
    int i = pick(rng);
    Rational a(scale_num(rng), scale_num(rng));
    Rational b(shift_num(rng), scale_num(rng));
    Game h = g.transform_payoffs(i, a, b);
    CHECK(h.profile_count() == g.profile_count());
    for (int k = 0; k < g.player_count(); ++k) {
      CHECK(h.move_names(k) == g.move_names(k));
      if (k == i) continue;
      for (std::size_t s = 0; s < g.profile_count(); ++s) {
        CHECK(h.payoff(h.profile_at(s), k) == g.payoff(g.profile_at(s), k));
      }
    }
    for (std::size_t s = 0; s < g.profile_count(); ++s) {
      CHECK(h.payoff(h.profile_at(s), i) == a * g.payoff(g.profile_at(s), i) + b);
    }
  }
}

TEST_CASE("opponent enumeration has the right length and no duplicates") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Game g = testutil::random_game(rng);
    for (int i = 0; i < g.player_count(); ++i) {
      std::size_t expected = 1;
      for (int k = 0; k < g.player_count(); ++k) {
        if (k != i) expected *= static_cast<std::size_t>(g.move_count(k));
      }
      CHECK(g.opponent_profile_count(i) == expected);
      std::set<OpponentProfile> seen;
      for (std::size_t o = 0; o < expected; ++o) {
        CHECK(seen.insert(g.opponent_profile_at(i, o)).second);
      }
    }
  }
}
