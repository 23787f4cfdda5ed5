#include <algorithm>

#include "common.hpp"
#include "oracle.hpp"
#include "pastebox/nerve.hpp"
#include "pastebox/structure.hpp"

using namespace pastebox;
using namespace pastebox::test;

TEST_CASE("nerves of standard grids are products of monotone maps") {
  for (int m1 = 0; m1 <= 3; ++m1)
    for (int m2 = 0; m2 <= 2; ++m2)
      for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n2 <= 2; ++n2) {
          const auto l = nerveLevel(standardGrid({m1, m2}), {n1, n2});
          CHECK(l.size() == oracle::monotoneMapCount(n1, m1) * oracle::monotoneMapCount(n2, m2));
        }
  // Frozen from the brute-force count.
  CHECK(nerveLevel(standardGrid({3, 2}), {2, 2}).size() == 200);
}

TEST_CASE("parallel and serial enumeration agree") {
  for (const char* name : {"EX_I", "PW", "TRIANGLE", "EX_J", "GRID_OPEN"}) {
    INFO(name);
    const Shape s = fixture(name);
    const std::vector<std::vector<int>> levels =
        s.dim() == 2 ? std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}}
                     : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 0}, {1, 2, 1}};
    for (const auto& n : levels) {
      const auto par = nerveLevel(s, n);
      const auto ser = nerveLevelSerial(s, n);
      CHECK(par.simplices == ser.simplices);
      CHECK(par.size() == oracle::nerveLevelCount(s, n));
      CHECK(std::is_sorted(par.simplices.begin(), par.simplices.end()));
      CHECK(std::adjacent_find(par.simplices.begin(), par.simplices.end()) == par.simplices.end());
    }
  }
}

TEST_CASE("simplex dimension and degeneracy") {
  CHECK(simplexDimension(Simplex{{{0, 0}, {1, 2}}}) == 1);
  CHECK(simplexDimension(Simplex{{{0, 1}, {1, 2}}}) == 2);
  CHECK(simplexDimension(Simplex{{{3}, {1}}}) == 0);
  CHECK(nonDegenerateCount(nerveLevel(standardGrid({2, 1}), {2, 1})) == 1);
  CHECK(nonDegenerateCount(nerveLevel(standardGrid({2, 1}), {1, 1})) == 3);
  CHECK_THROWS_AS(checkMonotone(Simplex{{{1, 0}, {0}}}), PasteboxError);
}

TEST_CASE("Segal maps of composable shapes") {
  for (const char* name : {"EX_I", "TRIANGLE", "EX_DECOMP", "SQ(3,2)"}) {
    INFO(name);
    NerveCache cache(fixture(name));
    for (const std::vector<int>& n : {std::vector<int>{2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}})
      CHECK(segalCheck(cache, n));
  }
}

TEST_CASE("a corrupted level fails the Segal check") {
  const Shape s = fixture("EX_I");
  NerveLevel full = nerveLevel(s, {2, 1});
  const NerveLevel unit = nerveLevel(s, {1, 1});
  REQUIRE(segalBijection(full, unit, 0));
  const auto it = std::find_if(full.simplices.begin(), full.simplices.end(),
                               [](const Simplex& x) { return simplexDimension(x) == 2; });
  REQUIRE(it != full.simplices.end());
  full.simplices.erase(it);
  CHECK_FALSE(segalBijection(full, unit, 0));

  NerveLevel extra = nerveLevel(s, {2, 1});
  extra.simplices.push_back(extra.simplices.front());
  std::sort(extra.simplices.begin(), extra.simplices.end());
  CHECK_FALSE(segalBijection(extra, unit, 0));
}

TEST_CASE("spines") {
  // The interval [0,2]: the spine misses exactly the maps reaching from 0 to 2.
  const auto gap = spineGapReport(standardGrid({2}), {2});
  CHECK(gap == std::vector<Simplex>{Simplex{{{0, 0, 2}}}, Simplex{{{0, 1, 2}}}, Simplex{{{0, 2, 2}}}});

  // The classical count for [0,3] at level 3: all monotone maps minus those
  // landing in one unit interval.
  const auto gap3 = spineGapReport(standardGrid({3}), {3});
  CHECK(gap3.size() == oracle::monotoneMapCount(3, 3) - (3 * oracle::monotoneMapCount(3, 1) - 2));
  CHECK(gap3.size() == 22);

  const auto pw = spineGapReport(fixture("PW"), {1, 1});
  CHECK(std::find(pw.begin(), pw.end(), Simplex{{{0, 3}, {0, 3}}}) != pw.end());
  CHECK(spineGapReport(fixture("PWo"), {1, 1}).empty());

  const auto spine = spineLevel(fixture("EX_I"), {1, 1});
  CHECK(spine.size() < nerveLevel(fixture("EX_I"), {1, 1}).size());
}

TEST_CASE("composition of simplices") {
  const Simplex outer{{{0, 2, 3}, {1, 4}}};
  const Simplex inner{{{0, 2}, {1, 1}}};
  CHECK(compose(outer, inner) == Simplex{{{0, 3}, {4, 4}}});
  CHECK_THROWS_AS(compose(outer, Simplex{{{0, 3}, {0}}}), PasteboxError);
}

TEST_CASE("pullback squares at the nerve level") {
  const Shape target = standardGrid({4, 3});
  const ShapeMap f = productMap(standardGrid({2, 1}), target, Simplex{{{0, 2, 3}, {1, 2}}});
  const ShapeMap g = productMap(standardGrid({1, 2}), target, Simplex{{{2, 4}, {0, 1, 2}}});
  const auto sq = gridPullback(f, g);
  REQUIRE(sq);
  const std::vector<std::vector<int>> levels{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}};
  CHECK(pullbackNerveCheck(*sq, levels));

  const std::vector<int> n{1, 1};
  NerveLevel apex = nerveLevel(sq->toF.source, n);
  const NerveLevel fromF = nerveLevel(f.source, n);
  const NerveLevel fromG = nerveLevel(g.source, n);
  REQUIRE(pullbackLevelCheck(*sq, apex, fromF, fromG));
  apex.simplices.pop_back();
  CHECK_FALSE(pullbackLevelCheck(*sq, apex, fromF, fromG));
}

TEST_CASE("nerves see through embeddings") {
  const Shape i = fixture("EX_I");
  const std::vector<int> axes{1, 2};
  const Shape e = embedAxes(i, axes, 3);
  for (const std::vector<int>& n : {std::vector<int>{1, 1}, {2, 1}})
    CHECK(nerveLevel(e, {0, n[0], n[1]}).size() == nerveLevel(i, n).size());
}
