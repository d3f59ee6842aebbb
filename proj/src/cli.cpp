#include "gamefix/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "gamefix/errors.hpp"
#include "gamefix/io.hpp"
#include "gamefix/markov.hpp"
#include "gamefix/position.hpp"
#include "gamefix/responses.hpp"

namespace gamefix {

namespace {

void print_table(std::ostream& out, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels,
                 const std::function<std::string(std::size_t, std::size_t)>& cell) {
  std::vector<std::vector<std::string>> cells(row_labels.size());
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
      cells[r].push_back(cell(r, c));
    }
  }
  std::size_t label_width = 0;
  for (const auto& label : row_labels) {
    label_width = std::max(label_width, label.size());
  }
  std::vector<std::size_t> widths(col_labels.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    widths[c] = col_labels[c].size();
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      widths[c] = std::max(widths[c], cells[r][c].size());
    }
  }
  auto pad = [&](const std::string& text, std::size_t width) {
    return text + std::string(width - text.size(), ' ');
  };
  out << pad("", label_width);
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    out << "  " << pad(col_labels[c], widths[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    out << pad(row_labels[r], label_width);
    for (std::size_t c = 0; c < col_labels.size(); ++c) {
      out << "  " << pad(cells[r][c], widths[c]);
    }
    out << '\n';
  }
}

void print_matrix(std::ostream& out, const StochasticMatrix& matrix,
                  const std::string& format) {
  if (format == "machine") {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      for (std::size_t r = 0; r < matrix.rows(); ++r) {
        out << "entry " << matrix.target().labels[r] << ' '
            << matrix.source().labels[c] << ' ' << format_rational(matrix.at(r, c))
            << '\n';
      }
    }
  } else {
    print_table(out, matrix.target().labels, matrix.source().labels,
                [&](std::size_t r, std::size_t c) {
                  return format_rational(matrix.at(r, c));
                });
  }
}

void print_relation(std::ostream& out, const Relation& rel,
                    const std::string& format) {
  // Rows are target elements, columns source elements, matching the matrix
  // layout of the stochastic concepts.
  if (format == "machine") {
    for (std::size_t c = 0; c < rel.source().size(); ++c) {
      for (std::size_t r = 0; r < rel.target().size(); ++r) {
        out << "entry " << rel.target().labels[r] << ' ' << rel.source().labels[c]
            << ' ' << (rel.relates(c, r) ? '1' : '0') << '\n';
      }
    }
  } else {
    print_table(out, rel.target().labels, rel.source().labels,
                [&](std::size_t r, std::size_t c) {
                  return std::string(rel.relates(c, r) ? "1" : "0");
                });
  }
}

void print_profiles(std::ostream& out, const Game& game,
                    const std::vector<Profile>& profiles) {
  if (profiles.empty()) {
    out << "EMPTY\n";
    return;
  }
  for (const Profile& profile : profiles) {
    for (std::size_t i = 0; i < profile.moves.size(); ++i) {
      if (i) out << ' ';
      out << game.move_name(static_cast<int>(i), profile.moves[i]);
    }
    out << '\n';
  }
}

EquilibriumKind equilibrium_kind(const std::string& name) {
  if (name == "nash") return EquilibriumKind::Nash;
  if (name == "ess") return EquilibriumKind::Ess;
  if (name == "uniform") return EquilibriumKind::Uniform;
  return EquilibriumKind::Constructive;
}

DistributionKind distribution_kind(const std::string& name) {
  if (name == "bd") return DistributionKind::Bd;
  if (name == "sd") return DistributionKind::Sd;
  if (name == "ud") return DistributionKind::Ud;
  return DistributionKind::Cd;
}

Position parse_init(const PositionGame& game, const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  const Game& base = game.base();
  if (parts.size() != static_cast<std::size_t>(base.player_count())) {
    throw ParseError("--init needs " + std::to_string(base.player_count()) +
                     " comma-separated values, got '" + text + "'");
  }
  if (game.kind() == PositionKind::CumulativeGains) {
    Gains gains;
    gains.reserve(parts.size());
    for (const std::string& part : parts) gains.push_back(parse_rational(part));
    return Position(std::move(gains));
  }
  Profile profile;
  profile.moves.reserve(parts.size());
  for (int i = 0; i < base.player_count(); ++i) {
    const std::string& name = parts[static_cast<std::size_t>(i)];
    const auto& names = base.move_names(i);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ParseError("--init: unknown move '" + name + "' for player " +
                       std::to_string(i));
    }
    profile.moves.push_back(static_cast<int>(it - names.begin()));
  }
  if (game.kind() == PositionKind::FullHistory) {
    return Position(History{std::move(profile)});
  }
  return Position(std::move(profile));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Response operators, equilibria, and position-game simulation "
               "for finite games"};
  app.name("gamefix");
  app.require_subcommand(1);

  std::string game_path;
  std::string chain_path;
  std::string concept_name;
  std::string format = "table";
  std::string builtin;
  std::string strategy_name;
  std::string init_text;
  int player = 0;
  int rounds = 0;
  std::uint64_t seed = 0;
  double tol = 1e-10;

  CLI::App* respond =
      app.add_subcommand("respond", "Print a player's response relation or "
                                    "response distribution matrix");
  respond->add_option("game", game_path, "game file")->required();
  respond->add_option("--player", player, "player index")->required();
  respond
      ->add_option("--concept", concept_name,
                   "br|sr|ur|cr (relations) or bd|sd|ud|cd (distributions)")
      ->required()
      ->check(CLI::IsMember({"br", "sr", "ur", "cr", "bd", "sd", "ud", "cd"}));
  respond->add_option("--format", format, "table or machine")
      ->check(CLI::IsMember({"table", "machine"}));

  CLI::App* equilibria_cmd =
      app.add_subcommand("equilibria", "Print the equilibrium profiles (strong "
                                       "fixed point), or EMPTY");
  equilibria_cmd->add_option("game", game_path, "game file")->required();
  equilibria_cmd
      ->add_option("--concept", concept_name, "nash|ess|uniform|constructive")
      ->required()
      ->check(CLI::IsMember({"nash", "ess", "uniform", "constructive"}));

  CLI::App* rationalizable_cmd = app.add_subcommand(
      "rationalizable",
      "Print the rationalizable profiles (weak fixed point), or EMPTY");
  rationalizable_cmd->add_option("game", game_path, "game file")->required();
  rationalizable_cmd
      ->add_option("--concept", concept_name, "nash|ess|uniform")
      ->required()
      ->check(CLI::IsMember({"nash", "ess", "uniform"}));

  CLI::App* stationary_cmd = app.add_subcommand(
      "stationary", "Print the stationary distribution of the profile chain");
  stationary_cmd->add_option("game", game_path, "game file")->required();
  stationary_cmd->add_option("--concept", concept_name, "bd|sd|ud|cd")
      ->required()
      ->check(CLI::IsMember({"bd", "sd", "ud", "cd"}));
  stationary_cmd->add_option("--tol", tol, "convergence tolerance");

  CLI::App* fixpoint_cmd = app.add_subcommand(
      "uniform-fixpoint",
      "Print the canonical fixed distribution of each chain in a family");
  fixpoint_cmd->add_option("chain", chain_path, "chain family file")->required();
  fixpoint_cmd->add_option("--tol", tol, "convergence tolerance");

  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Play a built-in position game");
  simulate_cmd
      ->add_option("--builtin", builtin, "pd|iterated-pd|inflation-pd")
      ->required()
      ->check(CLI::IsMember({"pd", "iterated-pd", "inflation-pd"}));
  simulate_cmd->add_option("--strategy", strategy_name, "tit-for-tat|cd")
      ->required()
      ->check(CLI::IsMember({"tit-for-tat", "cd"}));
  simulate_cmd
      ->add_option("--init", init_text,
                   "initial position: moves like c,d or gains like 0,0")
      ->required();
  simulate_cmd->add_option("--rounds", rounds, "number of rounds")->required();
  simulate_cmd->add_option("--seed", seed, "random seed (default 0)");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gamefix");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (respond->parsed()) {
      Game game = load_game(game_path);
      if (concept_name == "br" || concept_name == "sr" || concept_name == "ur" ||
          concept_name == "cr") {
        ResponseKind kind = concept_name == "br"   ? ResponseKind::BestResponse
                            : concept_name == "sr" ? ResponseKind::StableResponse
                            : concept_name == "ur" ? ResponseKind::UniformResponse
                                                   : ResponseKind::ConstructiveResponse;
        print_relation(out, response_relation(game, player, kind).rel, format);
      } else {
        print_matrix(out,
                     response_distribution(game, player,
                                           distribution_kind(concept_name)),
                     format);
      }
    } else if (equilibria_cmd->parsed()) {
      Game game = load_game(game_path);
      print_profiles(out, game, equilibria(game, equilibrium_kind(concept_name)));
    } else if (rationalizable_cmd->parsed()) {
      Game game = load_game(game_path);
      print_profiles(out, game,
                     rationalizable(game, equilibrium_kind(concept_name)));
    } else if (stationary_cmd->parsed()) {
      Game game = load_game(game_path);
      std::vector<double> pi =
          stationary_distribution(game, distribution_kind(concept_name), tol);
      for (std::size_t s = 0; s < pi.size(); ++s) {
        out << "prob " << game.profile_label(game.profile_at(s)) << ' '
            << format_double(pi[s]) << '\n';
      }
    } else if (fixpoint_cmd->parsed()) {
      ChainFamily family = load_chain_family(chain_path);
      Eigen::MatrixXd fixed = uniform_fixpoint(family, tol);
      for (Eigen::Index c = 0; c < fixed.cols(); ++c) {
        out << "column " << c << '\n';
        for (Eigen::Index r = 0; r < fixed.rows(); ++r) {
          out << "prob " << r << ' ' << format_double(fixed(r, c)) << '\n';
        }
      }
      out << "residual " << format_double(uniform_fixpoint_residual(family, fixed))
          << '\n';
    } else if (simulate_cmd->parsed()) {
      PositionGame game = builtin == "pd"            ? last_profile_pd()
                          : builtin == "iterated-pd" ? iterated_pd()
                                                     : inflation_pd();
      std::vector<PositionStrategy> strategies;
      for (int i = 0; i < game.base().player_count(); ++i) {
        strategies.push_back(strategy_name == "tit-for-tat"
                                 ? tit_for_tat(i)
                                 : cd_strategy(game, i));
      }
      Position init = parse_init(game, init_text);
      Trajectory trajectory =
          simulate(game, strategies, std::move(init), rounds, seed);
      out << export_trajectory(game.base(), trajectory);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}
