#include "gamefix/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gamefix/errors.hpp"

namespace gamefix {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    Line line{number, {}};
    std::string token;
    while (fields >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    fail(line.number, std::string("expected an integer ") + what + ", got '" +
                          token + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Game parse_game(const std::string& text) {
  std::vector<Line> lines = tokenize(text);

  int players = -1;
  int players_line = 0;
  std::vector<std::vector<std::string>> move_sets;
  std::vector<int> moves_line;
  std::vector<std::pair<Profile, std::vector<Rational>>> table;
  std::map<std::size_t, int> profile_lines;

  auto move_index = [&](int player, const std::string& name,
                        const Line& line) -> int {
    const auto& names = move_sets[static_cast<std::size_t>(player)];
    for (std::size_t m = 0; m < names.size(); ++m) {
      if (names[m] == name) return static_cast<int>(m);
    }
    fail(line.number, "unknown move '" + name + "' for player " +
                          std::to_string(player));
  };

  for (const Line& line : lines) {
    const std::string& directive = line.tokens[0];
    if (directive == "players") {
      if (players >= 0) {
        fail(line.number, "duplicate players line (first on line " +
                              std::to_string(players_line) + ")");
      }
      if (line.tokens.size() != 2) fail(line.number, "usage: players <m>");
      players = parse_int(line, line.tokens[1], "player count");
      if (players < 1) fail(line.number, "player count must be at least 1");
      players_line = line.number;
      move_sets.assign(static_cast<std::size_t>(players), {});
      moves_line.assign(static_cast<std::size_t>(players), 0);
    } else if (directive == "moves") {
      if (players < 0) fail(line.number, "moves line before players line");
      if (line.tokens.size() < 3) {
        fail(line.number, "usage: moves <player> <name> ...");
      }
      int player = parse_int(line, line.tokens[1], "player index");
      if (player < 0 || player >= players) {
        fail(line.number, "player index " + std::to_string(player) +
                              " out of range");
      }
      if (moves_line[static_cast<std::size_t>(player)] != 0) {
        fail(line.number,
             "duplicate moves line for player " + std::to_string(player) +
                 " (first on line " +
                 std::to_string(moves_line[static_cast<std::size_t>(player)]) + ")");
      }
      std::vector<std::string> names(line.tokens.begin() + 2, line.tokens.end());
      for (std::size_t a = 0; a < names.size(); ++a) {
        for (std::size_t b = a + 1; b < names.size(); ++b) {
          if (names[a] == names[b]) {
            fail(line.number, "player " + std::to_string(player) +
                                  " repeats move name '" + names[a] + "'");
          }
        }
      }
      move_sets[static_cast<std::size_t>(player)] = std::move(names);
      moves_line[static_cast<std::size_t>(player)] = line.number;
    } else if (directive == "payoff") {
      if (players < 0) fail(line.number, "payoff line before players line");
      for (int i = 0; i < players; ++i) {
        if (moves_line[static_cast<std::size_t>(i)] == 0) {
          fail(line.number, "payoff line before moves line for player " +
                                std::to_string(i));
        }
      }
      if (line.tokens.size() != 1 + 2 * static_cast<std::size_t>(players)) {
        fail(line.number,
             "expected " + std::to_string(players) + " moves and " +
                 std::to_string(players) + " payoffs, got " +
                 std::to_string(line.tokens.size() - 1) + " fields");
      }
      Profile profile;
      profile.moves.reserve(static_cast<std::size_t>(players));
      for (int i = 0; i < players; ++i) {
        profile.moves.push_back(
            move_index(i, line.tokens[1 + static_cast<std::size_t>(i)], line));
      }
      std::vector<Rational> payoff;
      payoff.reserve(static_cast<std::size_t>(players));
      for (int i = 0; i < players; ++i) {
        const std::string& token =
            line.tokens[1 + static_cast<std::size_t>(players + i)];
        try {
          payoff.push_back(parse_rational(token));
        } catch (const ParseError& e) {
          fail(line.number, e.what());
        }
      }
      std::size_t index = 0;
      for (int i = 0; i < players; ++i) {
        index = index * move_sets[static_cast<std::size_t>(i)].size() +
                static_cast<std::size_t>(profile.moves[static_cast<std::size_t>(i)]);
      }
      if (auto it = profile_lines.find(index); it != profile_lines.end()) {
        std::string label;
        for (int i = 0; i < players; ++i) {
          if (i) label += ' ';
          label += line.tokens[1 + static_cast<std::size_t>(i)];
        }
        fail(line.number, "duplicate profile " + label + " (first on line " +
                              std::to_string(it->second) + ")");
      }
      profile_lines[index] = line.number;
      table.emplace_back(std::move(profile), std::move(payoff));
    } else {
      fail(line.number, "unknown directive '" + directive + "'");
    }
  }

  if (players < 0) throw ParseError("no players line");
  for (int i = 0; i < players; ++i) {
    if (moves_line[static_cast<std::size_t>(i)] == 0) {
      throw ParseError("missing moves line for player " + std::to_string(i));
    }
  }
  std::size_t expected = 1;
  for (const auto& names : move_sets) expected *= names.size();
  if (table.size() != expected) {
    // Name the first uncovered profile for the error message.
    std::vector<bool> seen(expected, false);
    for (const auto& entry : profile_lines) seen[entry.first] = true;
    for (std::size_t index = 0; index < expected; ++index) {
      if (seen[index]) continue;
      std::string label;
      std::size_t rest = index;
      for (std::size_t i = move_sets.size(); i-- > 0;) {
        std::size_t m = rest % move_sets[i].size();
        rest /= move_sets[i].size();
        label = move_sets[i][m] + (label.empty() ? "" : " ") + label;
      }
      throw ParseError("missing profile " + label);
    }
  }
  return Game(std::move(move_sets), table);
}

Game load_game(const std::string& path) { return parse_game(read_file(path)); }

std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "players " << game.player_count() << '\n';
  for (int i = 0; i < game.player_count(); ++i) {
    out << "moves " << i;
    for (const std::string& name : game.move_names(i)) out << ' ' << name;
    out << '\n';
  }
  for (std::size_t s = 0; s < game.profile_count(); ++s) {
    Profile profile = game.profile_at(s);
    out << "payoff";
    for (std::size_t i = 0; i < profile.moves.size(); ++i) {
      out << ' ' << game.move_name(static_cast<int>(i), profile.moves[i]);
    }
    for (const Rational& p : game.payoff(profile)) {
      out << ' ' << format_rational(p);
    }
    out << '\n';
  }
  return out.str();
}

ChainFamily parse_chain_family(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty chain file");

  const Line& header = lines[0];
  if (header.tokens[0] != "blocks" || header.tokens.size() != 3) {
    fail(header.number, "expected header: blocks <k> <m>");
  }
  int k = parse_int(header, header.tokens[1], "state count");
  int m = parse_int(header, header.tokens[2], "block count");
  if (k < 1 || m < 1) fail(header.number, "state and block counts must be positive");

  std::size_t expected_rows = static_cast<std::size_t>(k) * static_cast<std::size_t>(m);
  if (lines.size() - 1 != expected_rows) {
    throw ParseError("expected " + std::to_string(expected_rows) +
                     " matrix rows, got " + std::to_string(lines.size() - 1));
  }

  ChainFamily family;
  std::size_t next_line = 1;
  for (int block = 0; block < m; ++block) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
      const Line& line = lines[next_line++];
      if (line.tokens.size() != static_cast<std::size_t>(k)) {
        fail(line.number, "expected " + std::to_string(k) + " entries, got " +
                              std::to_string(line.tokens.size()));
      }
      std::vector<Rational> row;
      row.reserve(static_cast<std::size_t>(k));
      for (const std::string& token : line.tokens) {
        Rational value;
        try {
          value = parse_rational(token);
        } catch (const ParseError& e) {
          fail(line.number, e.what());
        }
        if (value < 0) {
          fail(line.number, "negative probability " + token);
        }
        row.push_back(std::move(value));
      }
      rows.push_back(std::move(row));
    }
    Rational bound(1, 1000000000);  // 1e-9
    for (int c = 0; c < k; ++c) {
      Rational sum(0);
      for (int r = 0; r < k; ++r) {
        sum += rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
      Rational defect = sum - 1;
      if (defect < 0) defect = -defect;
      if (defect > bound) {
        throw ParseError("block " + std::to_string(block) + " column " +
                         std::to_string(c) + " sums to " + format_rational(sum) +
                         ", expected 1");
      }
    }
    Eigen::MatrixXd dense(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        dense(r, c) =
            to_double(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      }
    }
    family.blocks.push_back(std::move(dense));
  }
  return family;
}

ChainFamily load_chain_family(const std::string& path) {
  return parse_chain_family(read_file(path));
}

}
