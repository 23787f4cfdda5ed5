#include <algorithm>

#include "common.hpp"
#include "oracle.hpp"
#include "pastebox/grid.hpp"

using namespace pastebox;
using namespace pastebox::test;

namespace {

std::size_t intervalCount(int n) { return static_cast<std::size_t>((n + 1) * (n + 2) / 2); }

// Proper corner faces of a box, closed.
Shape shapeBoundaryOfCell(const Box& b) {
  std::vector<Box> faces;
  for (const Box& f : cornerSubboxes(b))
    if (f != b) faces.push_back(f);
  return close(b.ambient(), faces);
}

}  // namespace

TEST_CASE("standard grid sizes") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK(standardGrid({n, m}).size() == intervalCount(n) * intervalCount(m));
  CHECK(standardGrid({2, 1, 1}).size() == 6 * 3 * 3);
  const auto w = detectGrid(standardGrid({3, 2}));
  REQUIRE(w);
  CHECK(w->closed);
  CHECK(w->extents() == std::vector<int>{3, 2});
}

TEST_CASE("grid detection on fixtures") {
  const auto closed = detectGrid(fixture("GRID_CLOSED"));
  REQUIRE(closed);
  CHECK(closed->closed);
  CHECK(closed->lines == std::vector<std::vector<Coord>>{{0, 1, 2, 4}, {0, 2}});

  const auto open = detectGrid(fixture("GRID_OPEN"));
  REQUIRE(open);
  CHECK_FALSE(open->closed);
  CHECK(open->lines == std::vector<std::vector<Coord>>{{0, 2, 3, 5}, {0, 1, 2}});

  CHECK_FALSE(detectGrid(fixture("NONGRID")));
  CHECK_FALSE(detectGrid(fixture("PW")));
}

TEST_CASE("the grid witness is unique and fragile") {
  const Shape g = fixture("GRID_CLOSED");
  const auto w = *detectGrid(g);

  // Dropping the top boxes leaves an open grid on the same lines.
  const Shape open = truncate(g, 1);
  const auto wo = detectGrid(open);
  REQUIRE(wo);
  CHECK_FALSE(wo->closed);
  CHECK(wo->lines == w.lines);

  // Dropping one top box, or adding a stray edge, breaks it.
  const Shape missing = g.filter([](const Box& b) { return b != B({0, 0}, {1, 2}); });
  CHECK_FALSE(detectGrid(missing));
  const Shape stray = unite(g, close(2, {B({4, 2}, {5, 2})}));
  CHECK_FALSE(detectGrid(stray));

  CHECK(isDShaping(witnessMap(g, w)));
}

TEST_CASE("d-shaping maps") {
  CHECK(isDShaping(identityMap(standardGrid({2, 1}))));
  const Shape src = standardGrid({1, 1});
  const Shape tgt = standardGrid({2, 1});
  CHECK_FALSE(isDShaping(productMap(src, tgt, Simplex{{{0, 1}, {0, 1}}})));
  CHECK(isDShaping(productMap(src, tgt, Simplex{{{0, 2}, {0, 1}}})) == false);
  CHECK(isDShaping(productMap(tgt, tgt, Simplex{{{0, 1, 2}, {0, 1}}})));
}

TEST_CASE("grid boundary and cells") {
  const Shape g = fixture("GRID_CLOSED");
  const auto w = *detectGrid(g);
  const Shape boundary = gridBoundary(g, w);
  const Shape expected = g.filter([](const Box& b) {
    return (b.lo[0] == b.hi[0] && (b.lo[0] == 0 || b.lo[0] == 4)) ||
           (b.lo[1] == b.hi[1] && (b.lo[1] == 0 || b.lo[1] == 2));
  });
  CHECK(boundary == expected);
  CHECK(!findClosureViolation(2, boundary.boxes()));

  const auto cells = gridCells(g, w);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].window == B({0, 0}, {1, 2}));
  CHECK(cells[1].window == B({1, 0}, {2, 2}));
  CHECK(cells[2].window == B({2, 0}, {4, 2}));
  // Cells keep the subdivisions of their boundary.
  for (const auto& c : cells) CHECK(c.cell == restrictToWindow(g, c.window));
  CHECK(cells[2].cell.contains(B({2, 2}, {3, 2})));

  std::vector<Box> windows;
  for (const auto& c : cells) windows.push_back(c.window);
  auto vertebrae = oracle::vertebraWindows(g, 2);
  std::sort(vertebrae.begin(), vertebrae.end());
  std::sort(windows.begin(), windows.end());
  CHECK(windows == vertebrae);
}

TEST_CASE("boundaries and cells of small grids") {
  const Shape cell = standardGrid({1, 1});
  const Shape boundary = gridBoundary(cell, *detectGrid(cell));
  CHECK(boundary.size() == 8);
  CHECK_FALSE(boundary.contains(B({0, 0}, {1, 1})));

  const Shape g = standardGrid({2, 1});
  const auto cells = gridCells(g, *detectGrid(g));
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].window == B({0, 0}, {1, 1}));
  CHECK(cells[1].window == B({1, 0}, {2, 1}));

  const auto fam = boxdotFamily(BoxdotSpec{{2, 2}, {{0, 1}, {0, 1}}});
  CHECK(gridBoundary(fam.window, *detectGrid(fam.window)) == shapeBoundaryOfCell(B({0, 0}, {1, 1})));
}

TEST_CASE("boxdot membership") {
  const BoxdotSpec spec{{6, 4}, {{2, 5}, {1, 3}}};
  CHECK(inBoxdot(spec, B({0, 0}, {6, 1})));
  CHECK_FALSE(inBoxdot(spec, B({2, 1}, {5, 3})));
  CHECK(inBoxdot(spec, B({5, 0}, {6, 4})));
  CHECK_FALSE(inBoxdot(spec, B({1, 0}, {6, 4})));
  CHECK(inHalf(spec, false, 1, B({0, 0}, {6, 1})));
  CHECK(inHalf(spec, true, 0, B({5, 0}, {6, 4})));

  CHECK_THROWS_AS((BoxdotSpec{{6, 4}, {{5, 5}, {1, 3}}}.validate()), PasteboxError);
  CHECK_THROWS_AS((BoxdotSpec{{6, 4}, {{2, 7}, {1, 3}}}.validate()), PasteboxError);
}

TEST_CASE("boxdot family decomposes the grid") {
  for (const auto& spec : {BoxdotSpec{{6, 4}, {{2, 5}, {1, 3}}}, BoxdotSpec{{2, 2}, {{0, 2}, {0, 1}}},
                           BoxdotSpec{{3, 1, 2}, {{1, 2}, {0, 1}, {1, 2}}}}) {
    const auto fam = boxdotFamily(spec);
    const int d = static_cast<int>(spec.extents.size());
    CHECK(fam.grid == standardGrid(spec.extents));
    CHECK(unite(fam.boxdot, fam.window) == fam.grid);
    CHECK(fam.window == restrictToWindow(fam.grid, spec.windowBox()));
    Shape halves(d);
    for (const Shape& s : fam.lower) halves = unite(halves, s);
    for (const Shape& s : fam.upper) halves = unite(halves, s);
    CHECK(halves == fam.boxdot);
    for (const Box& b : fam.grid.boxes()) CHECK(fam.boxdot.contains(b) == inBoxdot(spec, b));
  }
}

TEST_CASE("grid pullbacks intersect images") {
  const Shape target = standardGrid({4, 3});
  const ShapeMap f = productMap(standardGrid({2, 1}), target, Simplex{{{0, 2, 3}, {1, 2}}});
  const ShapeMap g = productMap(standardGrid({1, 2}), target, Simplex{{{2, 4}, {0, 1, 2}}});
  const auto p = gridPullback(f, g);
  REQUIRE(p);
  CHECK(p->intersectedImages == std::vector<std::vector<Coord>>{{2}, {1, 2}});
  CHECK(p->level == std::vector<int>{0, 1});
  CHECK(p->tupleF == Simplex{{{0, 2, 3}, {1, 2}}});
  CHECK(p->tupleG == Simplex{{{2, 4}, {0, 1, 2}}});
  CHECK(tupleOf(p->toF, p->level) == Simplex{{{1}, {0, 1}}});
  CHECK(tupleOf(p->toG, p->level) == Simplex{{{0}, {1, 2}}});
  CHECK(validateShapeMap(p->toF).valid);
  CHECK(validateShapeMap(p->toG).valid);

  const ShapeMap h = productMap(standardGrid({1, 1}), target, Simplex{{{3, 4}, {0, 1}}});
  CHECK_FALSE(gridPullback(productMap(standardGrid({1, 1}), target, Simplex{{{0, 2}, {2, 3}}}), h));

  const ShapeMap collapse = productMap(standardGrid({1, 1}), target, Simplex{{{0, 0}, {0, 1}}});
  CHECK_THROWS_AS(gridPullback(collapse, h), PasteboxError);
}
