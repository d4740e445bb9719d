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

#include <doctest.h>

#include <set>

#include "dfsurf/error.hpp"
#include "dfsurf/rooted_tree.hpp"
#include "dfsurf/tree_io.hpp"
#include "support/fixtures.hpp"

using namespace dfsurf;
using namespace dfsurf::testing;

namespace {

RootedTree chain(int length) {
  RootedTree::Builder b("c0");
  for (int k = 1; k <= length; ++k) b.addChild("c" + std::to_string(k - 1), "c" + std::to_string(k));
  return b.build();
}

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("level") {
    const auto t = broom(3, {1, 0, -1}).shape();
    CHECK(t.level("r") == 0);
    CHECK(t.level("c1_1") == 1);
    CHECK(t.level("l2") == 3);
    // A chain of length r followed by subchains of length m puts the
    // deepest leaves at r + m.
    const auto f = sampleComb().shape();
    CHECK(f.level("e24") == 4);
    CHECK_THROWS_AS(t.level("nope"), Error);
  }

  TEST_CASE("leaves") {
    CHECK(RootedTree("r").leaves() == std::vector<NodeId>{"r"});
    CHECK(broom(2, {1, 2, 3, 4}).leaves().size() == 4);
    const auto c = chain(3);
    REQUIRE(c.leaves().size() == 1);
    CHECK(c.level(c.leaves().front()) == 3);
    CHECK(forkTree().leaves() == std::vector<NodeId>{"a", "b", "c"});
  }

  TEST_CASE("firstCommonAncestor") {
    const auto t = sampleComb().shape();
    CHECK(firstCommonAncestor(t, "e24", "e34") == "g");
    CHECK(firstCommonAncestor(t, "e24", "e13") == "e");
    CHECK(firstCommonAncestor(t, "f", "e") == "e0");
    const auto z = forkTree().shape();
    CHECK(firstCommonAncestor(z, "p", "q") == "r");
    try {
      firstCommonAncestor(z, "r", "a");
      FAIL("expected RootArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RootArgument);
    }
    try {
      firstCommonAncestor(z, "a", "zz");
      FAIL("expected UnknownNode");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownNode);
    }
  }

  TEST_CASE("maximalSubtree") {
    const auto t = sampleComb().shape();
    CHECK(maximalSubtree(t, "e0") == t);
    const auto c = maximalSubtree(chain(2), "c1");
    CHECK(c.size() == 2);
    CHECK(c.height() == 1);
    const auto up = maximalSubtree(t, "e");
    CHECK(up.root() == "e");
    CHECK(up.leaves() == std::vector<NodeId>{"e24", "e34", "e44", "e13"});
    CHECK(up.level("e24") == 2);
  }

  TEST_CASE("isChain and isComb") {
    CHECK(isChain(RootedTree("r")));
    CHECK_FALSE(isChain(broom(1, {1, -1}).shape()));
    CHECK(isChain(chain(5)));
    CHECK(isComb(sampleComb().shape()));
    CHECK_FALSE(isComb(forkTree().shape()));
    CHECK(isComb(chain(4)));
    CHECK(isComb(RootedTree("r")));
    CHECK_FALSE(isComb(broom(2, {1, -1}).shape()));
  }

  TEST_CASE("essentialSubtree") {
    const auto b = broom(1, {1, -1}).shape();
    CHECK(essentialSubtree(b).root == "r");
    CHECK(essentialSubtree(b).level == 0);
    CHECK(isEssential(b));
    const auto f = sampleComb().shape();
    CHECK(essentialSubtree(f).root == "e");
    CHECK(essentialSubtree(f).level == 2);
    CHECK_FALSE(isEssential(f));
    const auto c = chain(3);
    CHECK(essentialSubtree(c).root == "c3");
    CHECK(essentialSubtree(c).level == 3);
  }

  TEST_CASE("structural properties on random trees") {
    TreeGen gen(21);
    for (int k = 0; k < 150; ++k) {
      const auto t = gen.tree().shape();
      for (const auto& e : t.nodes()) {
        if (auto p = t.parent(e)) CHECK(t.level(*p) == t.level(e) - 1);
        const auto sub = maximalSubtree(t, e);
        // Leaves of (↑e) are the leaves of t below e, levels re-based.
        std::set<NodeId> below;
        for (const auto& l : t.leaves()) {
          if (t.isAncestorOrSelf(e, l)) below.insert(l);
        }
        const auto subLeaves = sub.leaves();
        CHECK(std::set<NodeId>(subLeaves.begin(), subLeaves.end()) == below);
        for (const auto& l : subLeaves) CHECK(sub.level(l) == t.level(l) - t.level(e));
        if (isComb(t)) CHECK(isComb(sub));
      }
      const auto es = essentialSubtree(t);
      const auto est = maximalSubtree(t, es.root);
      CHECK(essentialSubtree(est).level == 0);
      CHECK(essentialSubtree(est).root == es.root);
      if (!isChain(t)) {
        for (const auto& l : t.leaves()) CHECK(t.isAncestorOrSelf(es.root, l));
      }
      // Serialization keeps leaf order.
      const LabelledTree lt = gen.tree();
      CHECK(parseTreeFile(toCochainText(lt)).leaves() == lt.leaves());
    }
  }

  TEST_CASE("builder rejects malformed input") {
    RootedTree::Builder b("r");
    b.addChild("r", "a");
    CHECK_THROWS_AS(b.addChild("r", "a"), Error);
    CHECK_THROWS_AS(b.addChild("zz", "b"), Error);
    CHECK_THROWS_AS(b.addChild("a", "r"), Error);
  }

  TEST_CASE("canonicalShape ignores child order") {
    RootedTree::Builder a("r");
    a.addChild("r", "x").addChild("x", "y").addChild("r", "z");
    RootedTree::Builder b("s");
    b.addChild("s", "z").addChild("s", "x").addChild("x", "y");
    CHECK(canonicalShape(a.build(), "r") == canonicalShape(b.build(), "s"));
    CHECK(canonicalShape(a.build(), "r") != canonicalShape(chain(2), "c0"));
  }
}
