#include "ybe/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::size_t parse_index(const Token& t, std::size_t line, std::size_t n) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected a positive integer, got '" + std::string(t.text) + "'");
  }
  if (n != 0 && (value < 1 || value > n)) {
    throw ParseError(line, t.column,
                     "index " + std::to_string(value) + " out of range 1.." + std::to_string(n));
  }
  return value;
}

void expect(const Token& t, std::string_view word, std::size_t line) {
  if (t.text != word) {
    throw ParseError(line, t.column,
                     "expected '" + std::string(word) + "', got '" + std::string(t.text) + "'");
  }
}

// `<a> <b> -> <c> <d>` starting at tokens[1]; returns 0-based indices.
std::array<Index, 4> parse_arrow(const std::vector<Token>& toks, std::size_t line,
                                 std::size_t na, std::size_t nb, std::size_t nc,
                                 std::size_t nd) {
  if (toks.size() < 6) {
    throw ParseError(line, toks.back().column + toks.back().text.size(),
                     "expected '<i> <j> -> <k> <l>'");
  }
  expect(toks[3], "->", line);
  return {static_cast<Index>(parse_index(toks[1], line, na) - 1),
          static_cast<Index>(parse_index(toks[2], line, nb) - 1),
          static_cast<Index>(parse_index(toks[4], line, nc) - 1),
          static_cast<Index>(parse_index(toks[5], line, nd) - 1)};
}

struct CoefLine {
  Pair from;
  Pair to;
  Rational value;
  std::size_t line;
};

SolutionDocument finish_document(std::size_t n, std::vector<std::optional<Pair>> map,
                                 const std::vector<std::size_t>& map_lines,
                                 std::vector<std::string> names,
                                 const std::vector<CoefLine>& coefs) {
  std::vector<Pair> table(n * n);
  std::vector<std::size_t> hit_line(n * n, 0);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      auto k = x * n + y;
      table[k] = map[k].value_or(Pair{x, y});
    }
  for (std::size_t k = 0; k < n * n; ++k) {
    auto out = table[k].first * n + table[k].second;
    if (hit_line[out] != 0) {
      throw ParseError(map_lines[k], 0,
                       "non-bijective table: output pair (" + std::to_string(table[k].first + 1) +
                           "," + std::to_string(table[k].second + 1) + ") is produced twice");
    }
    hit_line[out] = map_lines[k] == 0 ? 1 : map_lines[k];
  }
  SolutionDocument doc{SolutionMap(n, std::move(table), std::move(names)), {}};
  for (const auto& c : coefs) {
    if (doc.solution(c.from) != c.to) {
      throw ParseError(c.line, 0, "coef line disagrees with the map");
    }
    if (c.value == 0) throw ParseError(c.line, 0, "coefficients must be nonzero");
    auto [it, inserted] = doc.coefficients.emplace(c.from, c.value);
    if (!inserted) throw ParseError(c.line, 0, "duplicate coef line");
  }
  return doc;
}

}  // namespace

SolutionDocument parse_solution_document(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t n = 0;
  bool seen_header = false;
  std::vector<std::string> names;
  std::vector<std::optional<Pair>> map;
  std::vector<std::size_t> map_lines;
  std::vector<CoefLine> coefs;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    if (!seen_header) {
      if (toks.size() != 2 || toks[0].text != "ybe-solution" || toks[1].text != "v1") {
        throw ParseError(line, toks[0].column, "expected header 'ybe-solution v1'");
      }
      seen_header = true;
      continue;
    }
    if (n == 0) {
      expect(toks[0], "n", line);
      if (toks.size() != 2) throw ParseError(line, toks[0].column, "expected 'n <integer>'");
      n = parse_index(toks[1], line, 0);
      if (n == 0) throw ParseError(line, toks[1].column, "n must be positive");
      map.assign(n * n, std::nullopt);
      map_lines.assign(n * n, 0);
      continue;
    }
    if (toks[0].text == "names") {
      if (!names.empty()) throw ParseError(line, toks[0].column, "duplicate names line");
      if (toks.size() != n + 1) {
        throw ParseError(line, toks[0].column, "expected exactly " + std::to_string(n) + " names");
      }
      for (std::size_t k = 1; k < toks.size(); ++k) names.emplace_back(toks[k].text);
      continue;
    }
    if (toks[0].text == "map") {
      if (toks.size() != 6) throw ParseError(line, toks[0].column, "expected 'map <i> <j> -> <k> <l>'");
      auto [i, j, k, l] = parse_arrow(toks, line, n, n, n, n);
      auto key = i * n + j;
      if (map[key]) {
        throw ParseError(line, toks[1].column,
                         "duplicate mapping for pair (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
      map[key] = Pair{k, l};
      map_lines[key] = line;
      continue;
    }
    if (toks[0].text == "coef") {
      if (toks.size() != 8) {
        throw ParseError(line, toks[0].column, "expected 'coef <i> <j> -> <k> <l> : <p>/<q>'");
      }
      auto [i, j, k, l] = parse_arrow(toks, line, n, n, n, n);
      expect(toks[6], ":", line);
      Rational value;
      try {
        value = parse_rational(toks[7].text);
      } catch (const ValidationError& e) {
        throw ParseError(line, toks[7].column, e.what());
      }
      coefs.push_back({Pair{i, j}, Pair{k, l}, value, line});
      continue;
    }
    throw ParseError(line, toks[0].column, "unknown directive '" + std::string(toks[0].text) + "'");
  }
  if (!seen_header) throw ParseError(1, 1, "missing header 'ybe-solution v1'");
  if (n == 0) throw ParseError(lines.size(), 0, "missing 'n <integer>' line");
  try {
    return finish_document(n, std::move(map), map_lines, std::move(names), coefs);
  } catch (const ValidationError& e) {
    throw ParseError(0, 0, e.what());
  }
}

SolutionMap parse_solution(std::string_view text) {
  return parse_solution_document(text).solution;
}

std::string serialize(const SolutionMap& s) { return serialize(s, {}); }

std::string serialize(const SolutionMap& s, const std::map<Pair, Rational>& coefficients) {
  std::ostringstream out;
  const std::size_t n = s.size();
  out << "ybe-solution v1\n";
  out << "n " << n << "\n";
  if (s.has_names()) {
    out << "names";
    for (const auto& nm : s.names()) out << ' ' << nm;
    out << "\n";
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      Pair p = s(x, y);
      if (p == Pair{x, y}) continue;
      out << "map " << x + 1 << ' ' << y + 1 << " -> " << p.first + 1 << ' ' << p.second + 1
          << "\n";
    }
  for (const auto& [from, value] : coefficients) {
    if (value == 1) continue;
    Pair to = s(from);
    out << "coef " << from.first + 1 << ' ' << from.second + 1 << " -> " << to.first + 1 << ' '
        << to.second + 1 << " : " << to_string(value) << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const SolutionMap& s) {
  nlohmann::json j;
  j["n"] = s.size();
  j["names"] = s.names();
  auto map = nlohmann::json::array();
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) {
      Pair p = s(x, y);
      if (p == Pair{x, y}) continue;
      map.push_back({x + 1, y + 1, p.first + 1, p.second + 1});
    }
  j["map"] = std::move(map);
  return j;
}

SolutionDocument parse_solution_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    if (n == 0) throw ParseError(0, 0, "n must be positive");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    // Default labels are equivalent to no labels.
    bool defaults = names.size() == n;
    for (std::size_t k = 0; defaults && k < n; ++k) defaults = names[k] == "x" + std::to_string(k + 1);
    if (defaults) names.clear();

    std::vector<std::optional<Pair>> map(n * n);
    std::vector<std::size_t> lines(n * n, 0);
    std::size_t entry = 0;
    for (const auto& row : j.at("map")) {
      ++entry;
      auto v = row.get<std::vector<std::size_t>>();
      if (v.size() != 4) throw ParseError(entry, 0, "map entries are 4-tuples");
      for (auto x : v)
        if (x < 1 || x > n) throw ParseError(entry, 0, "index out of range");
      auto key = (v[0] - 1) * n + (v[1] - 1);
      if (map[key]) throw ParseError(entry, 0, "duplicate mapping");
      map[key] = Pair{static_cast<Index>(v[2] - 1), static_cast<Index>(v[3] - 1)};
      lines[key] = entry;
    }
    std::vector<CoefLine> coefs;
    if (j.contains("coef")) {
      std::size_t k = 0;
      for (const auto& row : j.at("coef")) {
        ++k;
        if (row.size() != 5) throw ParseError(k, 0, "coef entries are [i, j, k, l, \"p/q\"]");
        auto idx = [&](int p) {
          auto x = row.at(p).get<std::size_t>();
          if (x < 1 || x > n) throw ParseError(k, 0, "index out of range");
          return static_cast<Index>(x - 1);
        };
        coefs.push_back({Pair{idx(0), idx(1)}, Pair{idx(2), idx(3)},
                         parse_rational(row.at(4).get<std::string>()), k});
      }
    }
    return finish_document(n, std::move(map), lines, std::move(names), coefs);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, 0, std::string("invalid solution JSON: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(0, 0, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SolutionDocument load_solution_file(const std::string& path) {
  auto text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, e.byte, e.what());
    }
    return parse_solution_json(j);
  }
  return parse_solution_document(text);
}

CrossMaps parse_cross_maps(std::string_view text, std::size_t nx, std::size_t ny) {
  CrossMaps c{nx, ny, std::vector<Pair>(nx * ny), std::vector<Pair>(ny * nx)};
  std::vector<bool> have_xy(nx * ny, false), have_yx(ny * nx, false);
  bool seen_header = false;
  auto lines = split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    if (!seen_header) {
      if (toks.size() != 2 || toks[0].text != "ybe-cross" || toks[1].text != "v1") {
        throw ParseError(line, toks[0].column, "expected header 'ybe-cross v1'");
      }
      seen_header = true;
      continue;
    }
    if (toks.size() != 6) throw ParseError(line, toks[0].column, "expected '<xmap|ymap> a b -> c d'");
    if (toks[0].text == "xmap") {
      auto [x, y, y2, x2] = parse_arrow(toks, line, nx, ny, ny, nx);
      if (have_xy[x * ny + y]) throw ParseError(line, toks[1].column, "duplicate xmap entry");
      have_xy[x * ny + y] = true;
      c.xy[x * ny + y] = {y2, x2};
    } else if (toks[0].text == "ymap") {
      auto [y, x, x2, y2] = parse_arrow(toks, line, ny, nx, nx, ny);
      if (have_yx[y * nx + x]) throw ParseError(line, toks[1].column, "duplicate ymap entry");
      have_yx[y * nx + x] = true;
      c.yx[y * nx + x] = {x2, y2};
    } else {
      throw ParseError(line, toks[0].column, "unknown directive '" + std::string(toks[0].text) + "'");
    }
  }
  if (!seen_header) throw ParseError(1, 1, "missing header 'ybe-cross v1'");
  for (std::size_t k = 0; k < nx * ny; ++k) {
    if (!have_xy[k]) {
      throw ParseError(0, 0, "xmap entry missing for (" + std::to_string(k / ny + 1) + "," +
                                 std::to_string(k % ny + 1) + ")");
    }
    if (!have_yx[k]) {
      throw ParseError(0, 0, "ymap entry missing for (" + std::to_string(k / nx + 1) + "," +
                                 std::to_string(k % nx + 1) + ")");
    }
  }
  return c;
}

std::string serialize(const CrossMaps& c) {
  std::ostringstream out;
  out << "ybe-cross v1\n";
  for (Index x = 0; x < c.nx; ++x)
    for (Index y = 0; y < c.ny; ++y) {
      Pair p = c.xy[x * c.ny + y];
      out << "xmap " << x + 1 << ' ' << y + 1 << " -> " << p.first + 1 << ' ' << p.second + 1 << "\n";
    }
  for (Index y = 0; y < c.ny; ++y)
    for (Index x = 0; x < c.nx; ++x) {
      Pair p = c.yx[y * c.nx + x];
      out << "ymap " << y + 1 << ' ' << x + 1 << " -> " << p.first + 1 << ' ' << p.second + 1 << "\n";
    }
  return out.str();
}

std::vector<Index> parse_word(const SolutionMap& s, std::string_view text) {
  std::vector<Index> word;
  for (const auto& t : tokenize(text)) {
    auto idx = s.find(t.text);
    if (!idx) throw ParseError(1, t.column, "unknown generator '" + std::string(t.text) + "'");
    word.push_back(*idx);
  }
  return word;
}

std::string format_word(const SolutionMap& s, const std::vector<Index>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += ' ';
    out += s.name(word[k]);
  }
  return out;
}

std::vector<unsigned> parse_u_monomial(std::string_view text, std::size_t n) {
  std::vector<unsigned> exps(n, 0);
  auto toks = tokenize(text);
  if (toks.size() == 1 && toks[0].text == "1") return exps;
  for (const auto& t : toks) {
    auto s = t.text;
    if (s.size() < 2 || s[0] != 'u') {
      throw ParseError(1, t.column, "expected u<i> or u<i>^<k>, got '" + std::string(s) + "'");
    }
    auto caret = s.find('^');
    Token idx{s.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
              t.column + 1};
    auto i = parse_index(idx, 1, n);
    unsigned k = 1;
    if (caret != std::string_view::npos) {
      Token e{s.substr(caret + 1), t.column + caret + 1};
      k = static_cast<unsigned>(parse_index(e, 1, 0));
    }
    exps[i - 1] += k;
  }
  return exps;
}

}  // namespace ybe
