// End-to-end checks over the whole library: closed-form values, brute-force
// cross-validation on random games, invariance under payoff rescaling, and
// normalization of every stochastic output. One PASS/FAIL line per check;
// the exit code is the number of failures.

#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gamefix/distributions.hpp"
#include "gamefix/errors.hpp"
#include "gamefix/game.hpp"
#include "gamefix/markov.hpp"
#include "gamefix/position.hpp"
#include "gamefix/rational.hpp"
#include "gamefix/responses.hpp"

#include "test_util.hpp"

using namespace gamefix;
using namespace testutil;

namespace {

int failures = 0;

void run_check(const char* name, const std::function<void()>& body) {
  try {
    body();
    std::printf("PASS %s\n", name);
  } catch (const std::exception& e) {
    std::printf("FAIL %s: %s\n", name, e.what());
    ++failures;
  }
}

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error(message);
}

void expect(bool condition, const std::string& message) {
  if (!condition) fail(message);
}

Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

void expect_columns(const StochasticMatrix& matrix,
                    const std::vector<std::vector<Rational>>& columns,
                    const std::string& what) {
  expect(matrix.cols() == columns.size(), what + ": column count");
  for (std::size_t c = 0; c < columns.size(); ++c) {
    expect(matrix.rows() == columns[c].size(), what + ": row count");
    for (std::size_t r = 0; r < columns[c].size(); ++r) {
      if (matrix.at(r, c) != columns[c][r]) {
        fail(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
             ") is " + format_rational(matrix.at(r, c)) + ", expected " +
             format_rational(columns[c][r]));
      }
    }
  }
}

std::vector<Profile> profiles_of(const Game& game,
                                 const std::vector<std::string>& labels) {
  std::vector<Profile> result;
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Profile p = game.profile_at(s);
    if (std::find(labels.begin(), labels.end(), game.profile_label(p)) !=
        labels.end()) {
      result.push_back(p);
    }
  }
  return result;
}

void expect_profiles(const Game& game, const std::vector<Profile>& actual,
                     const std::vector<std::string>& labels,
                     const std::string& what) {
  std::vector<Profile> expected = profiles_of(game, labels);
  if (actual != expected) {
    std::string got;
    for (const Profile& p : actual) got += " " + game.profile_label(p);
    fail(what + ": got {" + got + " }");
  }
}

PositionStrategy always(int player, int move) {
  PositionStrategy s;
  s.player = player;
  s.deterministic = [move](const Position&) { return move; };
  return s;
}

PositionStrategy scripted(int player, std::vector<int> moves) {
  PositionStrategy s;
  s.player = player;
  auto round = std::make_shared<std::size_t>(0);
  s.deterministic = [moves, round](const Position&) {
    std::size_t i = *round < moves.size() ? *round : moves.size() - 1;
    ++*round;
    return moves[i];
  };
  return s;
}

void check_exact_columns(const StochasticMatrix& matrix, const std::string& what) {
  for (std::size_t c = 0; c < matrix.cols(); ++c) {
    Rational sum(0);
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      expect(matrix.at(r, c) >= 0, what + ": negative entry");
      sum += matrix.at(r, c);
    }
    expect(sum == 1, what + ": column " + std::to_string(c) + " sums to " +
                         format_rational(sum));
  }
}

// -------------------------------------------------------------------------

void dilemma_distributions() {
  Game pd = prisoners_dilemma();
  for (int player = 0; player < 2; ++player) {
    std::string tag = "player " + std::to_string(player);
    expect_columns(bd(pd, player),
                   {{rat(10, 21), rat(11, 21)}, {rat(0), rat(1)}},
                   "bd " + tag);
    expect_columns(sd(pd, player),
                   {{rat(25, 58), rat(33, 58)}, {rat(0), rat(1)}},
                   "sd " + tag);
    expect_columns(ud(pd, player),
                   {{rat(1000, 1011), rat(11, 1011)}, {rat(0), rat(1)}},
                   "ud " + tag);
    expect_columns(cd(pd, player),
                   {{rat(19, 30), rat(11, 30)}, {rat(0), rat(1)}},
                   "cd " + tag);
  }
}

void dilemma_and_pennies_solutions() {
  Game pd = prisoners_dilemma();
  Game mp = matching_pennies();
  expect_profiles(pd, equilibria(pd, EquilibriumKind::Nash), {"d,d"},
                  "dilemma nash equilibria");
  expect_profiles(pd, equilibria(pd, EquilibriumKind::Constructive),
                  {"c,c", "d,d"}, "dilemma constructive equilibria");
  expect_profiles(pd, rationalizable(pd, EquilibriumKind::Nash), {"d,d"},
                  "dilemma nash rationalizable");
  expect(equilibria(mp, EquilibriumKind::Nash).empty(),
         "pennies should have no pure nash equilibrium");
}

void random_games_match_brute_force() {
  std::mt19937_64 rng(4242);
  GameOptions options;
  const EquilibriumKind kinds[] = {EquilibriumKind::Nash, EquilibriumKind::Ess,
                                   EquilibriumKind::Uniform};
  int constructive_checked = 0;
  for (int trial = 0; trial < 210; ++trial) {
    Game g = random_game(rng, options);
    for (EquilibriumKind kind : kinds) {
      if (to_index_set(g, equilibria(g, kind)) !=
          oracle_equilibrium_set(g, response_kind_of(kind))) {
        fail("equilibrium set mismatch on trial " + std::to_string(trial));
      }
      if (to_index_set(g, rationalizable(g, kind)) !=
          oracle_rationalizable_set(g, response_kind_of(kind))) {
        fail("rationalizable set mismatch on trial " + std::to_string(trial));
      }
    }
    if (g.player_count() == 2) {
      ++constructive_checked;
      if (to_index_set(g, equilibria(g, EquilibriumKind::Constructive)) !=
          oracle_equilibrium_set(g, ResponseKind::ConstructiveResponse)) {
        fail("constructive set mismatch on trial " + std::to_string(trial));
      }
    }
  }
  expect(constructive_checked >= 50, "too few two-player samples");
}

void dilemma_chains_absorb_at_defection() {
  Game pd = prisoners_dilemma();
  for (DistributionKind kind : {DistributionKind::Bd, DistributionKind::Sd,
                                DistributionKind::Ud, DistributionKind::Cd}) {
    std::vector<double> pi = stationary_distribution(pd, kind);
    expect(pi.size() == 4, "stationary distribution has wrong size");
    expect(pi[3] >= 1.0 - 1e-9,
           "mass on mutual defection is only " + std::to_string(pi[3]));
  }
}

void uniform_fixpoints_verify_and_solve() {
  std::mt19937_64 rng(7171);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int k = size(rng);
    int m = size(rng);
    ChainFamily family;
    for (int block = 0; block < m; ++block) {
      family.blocks.push_back(random_stochastic(rng, k));
    }
    Eigen::MatrixXd fixed = uniform_fixpoint(family);
    expect(verify_uniform_fixpoint(family, fixed, 1e-9),
           "fixed point fails verification on trial " + std::to_string(trial));
    for (Eigen::Index c = 0; c < fixed.cols(); ++c) {
      expect(std::abs(fixed.col(c).sum() - 1.0) <= 1e-9,
             "fixed-point column is not normalized");
      expect(fixed.col(c).minCoeff() >= -1e-9, "fixed-point column is negative");
    }
  }
  // Ergodic single chains: the canonical fixed point is the unique
  // stationary vector, so it must agree with a direct linear solve.
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    ChainFamily family;
    family.blocks.push_back(random_stochastic(rng, k, true));
    const Eigen::MatrixXd& h = family.blocks[0];
    Eigen::MatrixXd a(k + 1, k);
    a.topRows(k) = h - Eigen::MatrixXd::Identity(k, k);
    a.bottomRows(1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(k + 1);
    b(k) = 1.0;
    Eigen::VectorXd solved = a.colPivHouseholderQr().solve(b);
    Eigen::MatrixXd fixed = uniform_fixpoint(family);
    expect((fixed.col(0) - solved).cwiseAbs().maxCoeff() <= 1e-8,
           "ergodic fixed point disagrees with linear solve on trial " +
               std::to_string(trial));
  }
}

void rescaling_invariance() {
  std::mt19937_64 rng(9090);
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> shift(-5, 5);
  GameOptions any;
  GameOptions nonneg;
  nonneg.nonnegative = true;
  const ResponseKind kinds[] = {ResponseKind::BestResponse,
                                ResponseKind::StableResponse,
                                ResponseKind::UniformResponse,
                                ResponseKind::ConstructiveResponse};
  for (int trial = 0; trial < 110; ++trial) {
    // Relations are untouched by any positive affine change of payoffs.
    Game g = random_game(rng, any);
    Game t = g;
    for (int i = 0; i < g.player_count(); ++i) {
      t.transform_payoffs(i, Rational(num(rng), den(rng)),
                          Rational(shift(rng)));
    }
    for (int i = 0; i < g.player_count(); ++i) {
      for (ResponseKind kind : kinds) {
        if (kind == ResponseKind::ConstructiveResponse && g.player_count() != 2) {
          continue;
        }
        if (!(response_relation(g, i, kind).rel ==
              response_relation(t, i, kind).rel)) {
          fail("relation changed under affine transform on trial " +
               std::to_string(trial));
        }
      }
    }
    // The proportional distributions only tolerate pure scaling.
    Game p = random_game(rng, nonneg);
    Game q = p;
    for (int i = 0; i < p.player_count(); ++i) {
      q.transform_payoffs(i, Rational(num(rng), den(rng)), Rational(0));
    }
    for (int i = 0; i < p.player_count(); ++i) {
      expect(bd(p, i) == bd(q, i), "bd changed under scaling");
      expect(sd(p, i) == sd(q, i), "sd changed under scaling");
      if (p.player_count() == 2) {
        expect(ud(p, i) == ud(q, i), "ud changed under scaling");
      }
    }
  }
}

void trajectories_and_defection_advantage() {
  // Mutual cooperation holds under tit for tat.
  Trajectory agree = simulate(last_profile_pd(), {tit_for_tat(0), tit_for_tat(1)},
                              Position(Profile{{0, 0}}), 6, 0);
  for (std::size_t r = 0; r < agree.steps.size(); ++r) {
    expect(agree.steps[r].profile == Profile{{0, 0}}, "cooperation broke");
    expect(agree.steps[r].cumulative[0] == rat(10 * (static_cast<long long>(r) + 1)),
           "cooperative payoffs drifted");
  }
  // A one-sided defection makes tit for tat alternate forever.
  Trajectory swap = simulate(last_profile_pd(), {tit_for_tat(0), tit_for_tat(1)},
                             Position(Profile{{0, 1}}), 6, 0);
  for (std::size_t r = 0; r < swap.steps.size(); ++r) {
    Profile want{{r % 2 == 0 ? 1 : 0, r % 2 == 0 ? 0 : 1}};
    expect(swap.steps[r].profile == want, "alternation broke");
  }
  expect(swap.cumulative[0] == rat(33) && swap.cumulative[1] == rat(33),
         "alternating totals are wrong");

  // Inflation pulls the all-cooperate gains to 20 and all-defect gains to 2,
  // halving the distance each round.
  for (auto [move, target] : {std::pair{0, 20LL}, std::pair{1, 2LL}}) {
    Trajectory traj = simulate(inflation_pd(), {always(0, move), always(1, move)},
                               Position(Gains{rat(0), rat(0)}), 14, 0);
    for (std::size_t r = 0; r < traj.steps.size(); ++r) {
      Rational gap = rat(target) - traj.steps[r].cumulative[0];
      expect(gap == Rational(BigInt(target), BigInt(1) << (r + 1)),
             "inflation distance is not halving");
    }
  }

  // The closed-form defection advantage matches a pair of actual runs that
  // differ only in the first move of player 1.
  expect(defection_advantage(10) == rat(11, 1024),
         "defection advantage closed form");
  for (int extra : {0, 3, 10}) {
    Trajectory paired =
        simulate(inflation_pd(), {always(0, 1), scripted(1, {0, 1})},
                 Position(Gains{rat(0), rat(0)}), extra + 1, 0);
    Rational diff = paired.cumulative[0] - paired.cumulative[1];
    expect(diff == defection_advantage(extra),
           "paired runs disagree with the closed form at n=" +
               std::to_string(extra));
  }
}

void inflated_deterrence_closed_form() {
  PositionGame inflation = inflation_pd();
  Game pd = prisoners_dilemma();
  for (long long x : {0LL, 2LL, 10LL}) {
    Gains gains{rat(x), rat(x)};
    for (int player = 0; player < 2; ++player) {
      StochasticMatrix matrix = position_cd(inflation, player, gains);
      expect_columns(matrix,
                     {{rat(38 + x, 60 + 2 * x), rat(22 + x, 60 + 2 * x)},
                      {rat(x, 2 + 2 * x), rat(2 + x, 2 + 2 * x)}},
                     "inflated deterrence at x=" + std::to_string(x));
      if (x == 0) {
        expect(matrix == cd(pd, player),
               "zero-gain deterrence differs from the stateless matrix");
      }
    }
  }
}

void outputs_are_column_normalized() {
  std::mt19937_64 rng(1313);
  GameOptions nonneg;
  nonneg.nonnegative = true;
  for (int trial = 0; trial < 60; ++trial) {
    Game g = random_game(rng, nonneg);
    bool two = g.player_count() == 2;
    for (int i = 0; i < g.player_count(); ++i) {
      check_exact_columns(bd(g, i), "bd");
      check_exact_columns(sd(g, i), "sd");
      if (two) {
        check_exact_columns(ud(g, i), "ud");
        check_exact_columns(cd(g, i), "cd");
      }
    }
    check_exact_columns(profile_chain(g, DistributionKind::Bd), "bd chain");
    check_exact_columns(profile_chain(g, DistributionKind::Sd), "sd chain");
    if (two) {
      check_exact_columns(profile_chain(g, DistributionKind::Ud), "ud chain");
      check_exact_columns(profile_chain(g, DistributionKind::Cd), "cd chain");
    }
  }
  PositionGame inflation = inflation_pd();
  std::uniform_int_distribution<int> value(0, 12);
  for (int trial = 0; trial < 20; ++trial) {
    Gains gains{rat(value(rng)), rat(value(rng))};
    for (int player = 0; player < 2; ++player) {
      check_exact_columns(position_cd(inflation, player, gains),
                          "inflated deterrence");
    }
  }
  GameOptions small;
  small.max_players = 2;
  small.nonnegative = true;
  for (int trial = 0; trial < 10; ++trial) {
    Game g = random_game(rng, small);
    std::vector<double> pi = stationary_distribution(g, DistributionKind::Bd);
    double sum = 0;
    for (double p : pi) {
      expect(p >= -1e-9, "stationary entry is negative");
      sum += p;
    }
    expect(std::abs(sum - 1.0) <= 1e-9, "stationary mass is not 1");
  }
}

}  // namespace

int main() {
  run_check("dilemma response distributions match the closed forms exactly",
            dilemma_distributions);
  run_check("dilemma and matching-pennies solution sets are exact",
            dilemma_and_pennies_solutions);
  run_check("random-game solution sets match brute-force enumeration",
            random_games_match_brute_force);
  run_check("dilemma profile chains absorb at mutual defection",
            dilemma_chains_absorb_at_defection);
  run_check("uniform fixed points verify and match direct linear solves",
            uniform_fixpoints_verify_and_solve);
  run_check("responses are invariant under positive payoff rescaling",
            rescaling_invariance);
  run_check("tit-for-tat and inflation trajectories match the closed forms",
            trajectories_and_defection_advantage);
  run_check("inflated deterrence matrices match the closed form",
            inflated_deterrence_closed_form);
  run_check("every stochastic output is column-normalized",
            outputs_are_column_normalized);
  if (failures == 0) {
    std::printf("all acceptance checks passed\n");
  } else {
    std::printf("%d acceptance check(s) failed\n", failures);
  }
  return failures;
}
