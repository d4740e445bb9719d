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

// dfsurf: command-line front end for the labelled tree / surface library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dfsurf/completion.hpp"
#include "dfsurf/equivalence.hpp"
#include "dfsurf/error.hpp"
#include "dfsurf/morphism.hpp"
#include "dfsurf/surface.hpp"
#include "dfsurf/tree_io.hpp"

namespace {

using namespace dfsurf;

constexpr int kNegative = 1;
constexpr int kFailure = 2;

const char* yesNo(bool b) { return b ? "true" : "false"; }

LabelledTree loadTree(const std::string& path) { return parseTreeFile(readFile(path)); }

void writeOut(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int cmdValidate(const std::string& path) {
  const TreeFile f = parseTreeSyntax(readFile(path));
  const auto violations = treeFileViolations(f);
  if (violations.empty()) {
    std::cout << "valid (" << (f.format == TreeFormat::Weighted ? "weighted" : "cochain") << ", "
              << f.shape.leaves().size() << " leaves, height " << f.shape.height() << ")\n";
    return 0;
  }
  std::cout << "invalid: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) std::cout << "  " << v << '\n';
  return kNegative;
}

int cmdEssentialize(const std::string& path) {
  const Essentialization e = essentialize(loadTree(path));
  std::cout << "# m = " << e.m << "\n# c = " << e.c << '\n' << toCochainText(e.tree);
  return 0;
}

int cmdEquiv(const std::string& a, const std::string& b, bool strict) {
  const auto w = decideEquivalence(loadTree(a), loadTree(b), strict);
  if (!w) {
    std::cout << "not equivalent\n";
    return kNegative;
  }
  std::cout << "equivalent: a=" << w->a << ", b=" << w->b << ", leaf map";
  const char* sep = " ";
  for (const auto& [from, to] : w->treeIso) {
    std::cout << sep << from << "->" << to;
    sep = ", ";
  }
  std::cout << '\n';
  return 0;
}

int cmdMl(const std::string& path) {
  const LabelledTree t = loadTree(path);
  const bool comb = mlTrivial(t);
  const bool chain = mlViaBoundary(t);
  std::cout << "ML-trivial: " << yesNo(comb) << " (comb test), " << yesNo(chain) << " (boundary chain test)\n"
            << "canonical sheaf trivial: " << yesNo(canonicalSheafTrivial(t)) << '\n'
            << "comb of height <= 1: " << yesNo(odsCharacterization(t)) << '\n';
  return comb && chain ? 0 : kNegative;
}

void printSystem(const EquationSystem& s, bool text) {
  if (text) {
    std::cout << toText(s);
  } else {
    std::cout << toJson(s) << '\n';
  }
}

int cmdComb(const std::string& path, bool text, const std::string& treeOut) {
  const CombResult r = emitCombEquations(parseCombSpec(readFile(path)));
  if (!treeOut.empty()) writeOut(treeOut, toCochainText(r.tree));
  printSystem(r.system, text);
  return verifyRelations(r.system).empty() ? 0 : kFailure;
}

int cmdEquations(const std::string& path, bool text) {
  const EquationSystem s = emitBroomEquations(loadTree(path));
  printSystem(s, text);
  return verifyRelations(s).empty() ? 0 : kFailure;
}

int cmdGluing(const std::string& path) {
  const SurfaceDescriptor d = descriptor(loadTree(path));
  std::cout << "n = " << d.n << "\nh = " << d.h << '\n';
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    std::cout << "leaf " << i + 1 << ": " << d.leaves[i] << "  m = " << d.m[i] << "  mu = " << d.mu[i]
              << "  sigma = " << d.sigma[i] << '\n';
  }
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    for (std::size_t j = 0; j < d.leaves.size(); ++j) {
      if (i != j) std::cout << "g[" << i + 1 << "][" << j + 1 << "] = " << d.transition[i][j] << '\n';
    }
  }
  std::cout << "affine: " << yesNo(isAffine(d)) << '\n';
  return 0;
}

int cmdBoundary(const std::string& path, const std::string& dotOut) {
  const LabelledTree t = loadTree(path);
  const CurveConfig b = boundaryDualGraph(t);
  if (!dotOut.empty()) writeOut(dotOut, toDot(b));
  if (dotOut == "-") return 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::cout << b.curve(i).name << " (s=" << b.curve(i).selfIntersection << "):";
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.adjacent(i, j)) std::cout << ' ' << b.curve(j).name;
    }
    std::cout << '\n';
  }
  std::cout << "chain: " << yesNo(isPathGraph(b)) << "\nminimal: " << yesNo(isMinimalCompletion(b)) << '\n';
  return 0;
}

int cmdFactor(const std::string& source, const std::string& target, const std::string& mapPath) {
  const TreeMorphism phi = glueMorphisms(loadTree(source), loadTree(target), parseLeafMap(readFile(mapPath)));
  const Factorization f = factorMorphism(phi);
  std::cout << "blow-downs: " << f.blowDowns.size() << '\n';
  for (const auto& step : f.blowDowns) std::cout << "  collapse " << step.node << '\n';
  std::cout << "embedding:\n";
  for (const auto& id : f.embedding.source.shape().nodes()) {
    std::cout << "  " << id << " -> " << f.embedding(id) << '\n';
  }
  return 0;
}

int cmdFromMetric(const std::string& path) {
  std::cout << toCochainText(buildFromUltrametric(parseMetricFile(readFile(path))).tree);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labelled rooted trees and Danielewski-Fieseler surfaces"};
  app.require_subcommand(1);
  bool exitCode = false;
  app.add_flag("--exit-code", exitCode, "Exit with 1 on negative answers");

  std::string fileA;
  std::string fileB;
  std::string fileC;
  bool strict = false;
  bool text = false;
  bool json = false;
  std::string dotOut;
  std::string treeOut;

  auto* validate = app.add_subcommand("validate", "Check a tree file");
  validate->add_option("tree", fileA)->required();
  auto* ess = app.add_subcommand("essentialize", "Print the essential subtree");
  ess->add_option("tree", fileA)->required();
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two trees");
  equiv->add_option("first", fileA)->required();
  equiv->add_option("second", fileB)->required();
  equiv->add_flag("--strict-constant-b", strict, "Only allow constant b");
  auto* ml = app.add_subcommand("ml", "Makar-Limanov triviality by both tests");
  ml->add_option("tree", fileA)->required();
  auto* comb = app.add_subcommand("comb", "Equations of the comb surface given by root lists");
  comb->add_option("spec", fileA)->required();
  comb->add_option("--tree", treeOut, "Write the comb tree to this file ('-' for stdout)");
  auto* equations = app.add_subcommand("equations", "Equations of a broom surface");
  equations->add_option("tree", fileA)->required();
  for (auto* sub : {comb, equations}) {
    auto* j = sub->add_flag("--json", json, "JSON output (default)");
    sub->add_flag("--text", text, "Plain text output")->excludes(j);
  }
  auto* gluing = app.add_subcommand("gluing", "Print the transition functions");
  gluing->add_option("tree", fileA)->required();
  auto* boundary = app.add_subcommand("boundary", "Boundary dual graph of the canonical completion");
  boundary->add_option("tree", fileA)->required();
  boundary->add_option("--dot", dotOut, "Write Graphviz output to this file ('-' for stdout)");
  auto* factor = app.add_subcommand("factor", "Factor a morphism into blow-downs and an embedding");
  factor->add_option("source", fileA)->required();
  factor->add_option("target", fileB)->required();
  factor->add_option("map", fileC)->required();
  auto* metric = app.add_subcommand("from-metric", "Build a tree from (n, m, d, sigma) data");
  metric->add_option("data", fileA)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kFailure;
  }

  int rc = 0;
  try {
    if (*validate) rc = cmdValidate(fileA);
    else if (*ess) rc = cmdEssentialize(fileA);
    else if (*equiv) rc = cmdEquiv(fileA, fileB, strict);
    else if (*ml) rc = cmdMl(fileA);
    else if (*comb) rc = cmdComb(fileA, text, treeOut);
    else if (*equations) rc = cmdEquations(fileA, text);
    else if (*gluing) rc = cmdGluing(fileA);
    else if (*boundary) rc = cmdBoundary(fileA, dotOut);
    else if (*factor) rc = cmdFactor(fileA, fileB, fileC);
    else if (*metric) rc = cmdFromMetric(fileA);
  } catch (const Error& e) {
    std::cerr << "error: " << errorName(e.code()) << ": " << e.what() << '\n';
    for (std::size_t i = 1; i < e.items().size(); ++i) std::cerr << "  " << e.items()[i] << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  if (rc == kNegative && !exitCode) rc = 0;
  return rc;
}
