// Copyright (c) 2026 The dfsurf Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dfsurf/tree_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dfsurf/error.hpp"

namespace dfsurf {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> splitLines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view physical = text.substr(pos, end - pos);
    ++number;
    physical = physical.substr(0, std::min(physical.find('#'), physical.size()));
    std::size_t start = 0;
    while (start <= physical.size()) {
      const std::size_t semi = std::min(physical.find(';', start), physical.size());
      std::istringstream in{std::string(physical.substr(start, semi - start))};
      Line line{number, {}};
      for (std::string tok; in >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty()) out.push_back(std::move(line));
      start = semi + 1;
    }
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(const Line& line, const std::string& message) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line.number) + ": " + message, line.number);
}

std::string joinFrom(const std::vector<std::string>& tokens, std::size_t first) {
  std::string out;
  for (std::size_t i = first; i < tokens.size(); ++i) {
    if (i > first) out += ' ';
    out += tokens[i];
  }
  return out;
}

template <typename F>
auto parsed(const Line& line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) syntax(line, e.what());
    throw;
  }
}

int parseInt(const Line& line, const std::string& tok) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error&) {
    syntax(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

TreeFile parseTreeSyntax(std::string_view text) {
  const auto lines = splitLines(text);
  std::optional<TreeFormat> declared;
  bool anyLeaf = false;
  for (const auto& line : lines) {
    if (line.tokens[0] == "leaf") anyLeaf = true;
    if (line.tokens[0] != "format") continue;
    if (line.tokens.size() != 2) syntax(line, "expected 'format weighted' or 'format cochain'");
    if (declared) syntax(line, "duplicate format line");
    if (line.tokens[1] == "weighted") {
      declared = TreeFormat::Weighted;
    } else if (line.tokens[1] == "cochain") {
      declared = TreeFormat::Cochain;
    } else {
      syntax(line, "unknown format '" + line.tokens[1] + "'");
    }
  }
  TreeFile f;
  f.format = declared.value_or(anyLeaf ? TreeFormat::Cochain : TreeFormat::Weighted);
  const bool weighted = f.format == TreeFormat::Weighted;

  std::optional<RootedTree::Builder> builder;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    const std::string& kw = t[0];
    if (kw == "format") continue;
    if (kw == "root") {
      if (t.size() != 2) syntax(line, "expected 'root <id>'");
      if (builder) syntax(line, "duplicate root line");
      builder.emplace(t[1]);
    } else if (kw == "edge") {
      if (!builder) syntax(line, "edge before root");
      if (t.size() != (weighted ? 4u : 3u)) {
        syntax(line, weighted ? "expected 'edge <parent> <child> <weight>'" : "expected 'edge <parent> <child>'");
      }
      try {
        builder->addChild(t[1], t[2]);
      } catch (const Error& e) {
        syntax(line, e.what());
      }
      if (weighted) f.weights.emplace(t[2], parsed(line, [&] { return Rational::parse(t[3]); }));
    } else if (kw == "leaf") {
      if (weighted) syntax(line, "leaf labels are not allowed in the weighted format");
      if (t.size() < 4 || t[2] != "sigma") syntax(line, "expected 'leaf <id> sigma <polynomial>'");
      const Poly p = parsed(line, [&] { return Poly::parse(joinFrom(t, 3)); });
      if (!f.sigma.emplace(t[1], p).second) syntax(line, "duplicate label for '" + t[1] + "'");
    } else {
      syntax(line, "unknown keyword '" + kw + "'");
    }
  }
  if (!builder) throw Error(ErrorCode::SyntaxError, "no root line", 0);
  f.shape = builder->build();
  return f;
}

std::vector<std::string> treeFileViolations(const TreeFile& f) {
  std::vector<std::string> out;
  if (f.format == TreeFormat::Weighted) {
    const WeightedTree w(f.shape, f.weights);
    for (const auto& [a, b] : w.fineViolations()) {
      out.push_back("fine condition: siblings '" + a + "' and '" + b + "' share the weight " +
                    w.weight(a).toString());
    }
    return out;
  }
  for (const auto& v : validate(LabelledTree(f.shape, f.sigma))) out.push_back(v.message);
  return out;
}

LabelledTree toLabelledTree(const TreeFile& f) {
  auto items = treeFileViolations(f);
  if (!items.empty()) {
    std::string msg = items.front();
    if (items.size() > 1) msg += " (and " + std::to_string(items.size() - 1) + " more)";
    throw Error(ErrorCode::ValidationError, msg, 0, std::move(items));
  }
  if (f.format == TreeFormat::Weighted) return fromWeighted(WeightedTree(f.shape, f.weights));
  return LabelledTree(f.shape, f.sigma);
}

LabelledTree parseTreeFile(std::string_view text) { return toLabelledTree(parseTreeSyntax(text)); }

std::string toCochainText(const LabelledTree& t) {
  const auto& shape = t.shape();
  std::ostringstream out;
  out << "format cochain\nroot " << shape.root() << '\n';
  for (const auto& id : shape.nodes()) {
    for (const auto& c : shape.children(id)) out << "edge " << id << ' ' << c << '\n';
  }
  for (const auto& leaf : shape.leaves()) out << "leaf " << leaf << " sigma " << t.sigma(leaf) << '\n';
  return out.str();
}

CombSpec parseCombSpec(std::string_view text) {
  CombSpec spec;
  for (const auto& line : splitLines(text)) {
    const auto& t = line.tokens;
    if (t[0] != "poly") syntax(line, "expected 'poly <root> ... [distinguished <root>]'");
    CombFactor f;
    std::optional<Rational> marked;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] == "distinguished") {
        if (i + 2 != t.size()) syntax(line, "'distinguished' takes exactly one root and ends the line");
        marked = parsed(line, [&] { return Rational::parse(t[i + 1]); });
        break;
      }
      f.roots.push_back(parsed(line, [&] { return Rational::parse(t[i]); }));
    }
    if (f.roots.empty()) syntax(line, "a polynomial needs at least one root");
    if (marked) {
      std::size_t k = 0;
      while (k < f.roots.size() && !(f.roots[k] == *marked)) ++k;
      if (k == f.roots.size()) syntax(line, "distinguished root " + marked->toString() + " is not a root");
      f.distinguished = k;
    }
    spec.polys.push_back(std::move(f));
  }
  return spec;
}

std::map<NodeId, NodeId> parseLeafMap(std::string_view text) {
  std::map<NodeId, NodeId> out;
  for (const auto& line : splitLines(text)) {
    const auto& t = line.tokens;
    if (t.size() != 3 || t[0] != "map") syntax(line, "expected 'map <source leaf> <target leaf>'");
    if (!out.emplace(t[1], t[2]).second) syntax(line, "leaf '" + t[1] + "' mapped twice");
  }
  return out;
}

UltrametricData parseMetricFile(std::string_view text) {
  const auto lines = splitLines(text);
  UltrametricData u;
  bool haveN = false;
  for (const auto& line : lines) {
    if (line.tokens[0] != "n") continue;
    if (line.tokens.size() != 2 || haveN) syntax(line, "expected a single 'n <count>' line");
    u.n = parseInt(line, line.tokens[1]);
    if (u.n < 1) syntax(line, "n must be positive");
    haveN = true;
  }
  if (!haveN) throw Error(ErrorCode::SyntaxError, "missing 'n <count>' line", 0);
  const auto n = static_cast<std::size_t>(u.n);
  u.d.assign(n, std::vector<int>(n, 0));
  u.sigma.assign(n, Poly());
  std::set<std::pair<int, int>> explicitD;
  auto index = [&](const Line& line, const std::string& tok) {
    const int i = parseInt(line, tok);
    if (i < 1 || i > u.n) syntax(line, "index " + tok + " out of range 1.." + std::to_string(u.n));
    return static_cast<std::size_t>(i - 1);
  };
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "n") continue;
    if (t[0] == "m") {
      if (!u.m.empty()) syntax(line, "duplicate 'm' line");
      for (std::size_t i = 1; i < t.size(); ++i) u.m.push_back(parseInt(line, t[i]));
    } else if (t[0] == "d") {
      if (t.size() != 4) syntax(line, "expected 'd <i> <j> <value>'");
      const auto i = index(line, t[1]);
      const auto j = index(line, t[2]);
      const int v = parseInt(line, t[3]);
      u.d[i][j] = v;
      explicitD.emplace(i, j);
      if (!explicitD.count({j, i})) u.d[j][i] = v;
    } else if (t[0] == "sigma") {
      if (t.size() < 3) syntax(line, "expected 'sigma <i> <polynomial>'");
      u.sigma[index(line, t[1])] = parsed(line, [&] { return Poly::parse(joinFrom(t, 2)); });
    } else {
      syntax(line, "unknown keyword '" + t[0] + "'");
    }
  }
  return u;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace dfsurf
