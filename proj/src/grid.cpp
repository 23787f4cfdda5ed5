#include "pastebox/grid.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pastebox {

Shape standardGrid(const std::vector<int>& extents) {
  IntervalChoices choices;
  for (int n : extents) {
    if (n < 0) throw PasteboxError("negative grid extent");
    std::vector<Coord> values;
    for (int i = 0; i <= n; ++i) values.push_back(i);
    choices.push_back(orderedPairs(values));
  }
  return Shape::fromClosedBoxesUnchecked(static_cast<int>(extents.size()), productBoxes(choices));
}

std::vector<Box> latticeBoxes(const std::vector<std::vector<Coord>>& lines, int maxDim) {
  IntervalChoices choices;
  for (const auto& l : lines) choices.push_back(orderedPairs(l));
  std::vector<Box> out;
  for (const Box& b : productBoxes(choices))
    if (b.dimension() <= maxDim) out.push_back(b);
  return out;
}

std::vector<int> GridWitness::extents() const {
  std::vector<int> out;
  for (const auto& l : lines) out.push_back(static_cast<int>(l.size()) - 1);
  return out;
}

Box GridWitness::corners() const {
  const int d = static_cast<int>(lines.size());
  Vertex lo(d), hi(d);
  for (int a = 0; a < d; ++a) {
    lo[a] = lines[static_cast<std::size_t>(a)].front();
    hi[a] = lines[static_cast<std::size_t>(a)].back();
  }
  return Box(lo, hi);
}

bool GridWitness::isCell() const {
  return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.size() == 2; });
}

ShapeMap witnessMap(const Shape& grid, const GridWitness& w) {
  const int d = grid.dim();
  Shape source = standardGrid(w.extents());
  if (!w.closed && d > 0) source = truncate(source, d - 1);
  return productMap(source, grid, Simplex{w.lines});
}

bool isDShaping(const ShapeMap& m) {
  const MapReport report = validateShapeMap(m);
  if (!report.valid) throw PasteboxError("isDShaping: invalid map: " + report.violation);
  if (!isInjective(m)) return false;
  const int d = m.target.dim();
  std::unordered_set<Box, BoxHash> hit;
  for (const Box& b : m.source.boxesOfDimension(d)) hit.insert(m.apply(b));
  for (const Box& b : m.target.boxesOfDimension(d))
    if (!hit.count(b)) return false;
  return true;
}

namespace {

bool pinned(const Box& b, const std::vector<std::vector<Coord>>& lines) {
  for (int a = 0; a < b.ambient(); ++a) {
    if (b.lo[a] != b.hi[a]) continue;
    const auto& l = lines[static_cast<std::size_t>(a)];
    if (std::binary_search(l.begin(), l.end(), b.lo[a])) return true;
  }
  return false;
}

bool onLines(const Box& b, const std::vector<std::vector<Coord>>& lines) {
  for (int a = 0; a < b.ambient(); ++a) {
    const auto& l = lines[static_cast<std::size_t>(a)];
    if (!std::binary_search(l.begin(), l.end(), b.lo[a]) || !std::binary_search(l.begin(), l.end(), b.hi[a]))
      return false;
  }
  return true;
}

}  // namespace

std::optional<GridWitness> detectGrid(const Shape& shape) {
  const int d = shape.dim();
  if (shape.empty()) return std::nullopt;
  if (d == 0) {
    if (shape.size() == 1) return GridWitness{{}, true};
    return std::nullopt;
  }

  std::vector<std::set<Coord>> candidates(static_cast<std::size_t>(d));
  for (const Box& b : shape.boxes()) {
    if (b.dimension() != d - 1) continue;
    for (int a = 0; a < d; ++a)
      if (!b.strictIn(a)) candidates[static_cast<std::size_t>(a)].insert(b.lo[a]);
  }
  GridWitness w;
  for (const auto& c : candidates) {
    if (c.size() < 2) return std::nullopt;
    w.lines.emplace_back(c.begin(), c.end());
  }
  const auto top = shape.boxesOfDimension(d);
  w.closed = !top.empty();

  for (const Box& b : latticeBoxes(w.lines, w.closed ? d : d - 1))
    if (!shape.contains(b)) return std::nullopt;
  for (const Box& b : top)
    if (!onLines(b, w.lines)) return std::nullopt;

  const Box corners = w.corners();
  for (const Box& b : shape.boxes()) {
    if (b.dimension() == d) continue;
    if (!corners.contains(b) || !pinned(b, w.lines)) return std::nullopt;
  }
  return w;
}

namespace {
void requireWitness(const Shape& grid, const GridWitness& w) {
  auto actual = detectGrid(grid);
  if (!actual || !(*actual == w)) throw PasteboxError("witness does not match the grid");
}
}  // namespace

Shape gridBoundary(const Shape& grid, const GridWitness& w) {
  requireWitness(grid, w);
  const Box c = w.corners();
  return grid.filter([&](const Box& b) {
    for (int a = 0; a < b.ambient(); ++a)
      if (b.lo[a] == b.hi[a] && (b.lo[a] == c.lo[a] || b.lo[a] == c.hi[a])) return true;
    return false;
  });
}

std::vector<GridCell> gridCells(const Shape& grid, const GridWitness& w) {
  requireWitness(grid, w);
  IntervalChoices choices;
  for (const auto& l : w.lines) {
    std::vector<std::pair<Coord, Coord>> steps;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) steps.emplace_back(l[i], l[i + 1]);
    choices.push_back(std::move(steps));
  }
  std::vector<GridCell> out;
  for (const Box& window : productBoxes(choices)) out.push_back({window, restrictToWindow(grid, window)});
  return out;
}

void BoxdotSpec::validate() const {
  if (extents.size() != window.size()) throw PasteboxError("boxdot spec: extents and window differ in length");
  if (extents.empty() || static_cast<int>(extents.size()) > kMaxDim) throw PasteboxError("boxdot spec: bad dimension");
  for (std::size_t a = 0; a < extents.size(); ++a) {
    if (extents[a] < 1) throw PasteboxError("boxdot spec: extents must be positive");
    const auto [lo, hi] = window[a];
    if (lo < 0 || lo >= hi || hi > extents[a]) throw PasteboxError("boxdot spec: window out of range");
  }
}

Box BoxdotSpec::windowBox() const {
  const int d = static_cast<int>(window.size());
  Vertex lo(d), hi(d);
  for (int a = 0; a < d; ++a) {
    lo[a] = window[static_cast<std::size_t>(a)].first;
    hi[a] = window[static_cast<std::size_t>(a)].second;
  }
  return Box(lo, hi);
}

bool inHalf(const BoxdotSpec& spec, bool upper, int a, const Box& b) {
  const auto [lo, hi] = spec.window[static_cast<std::size_t>(a)];
  return upper ? b.lo[a] >= hi : b.hi[a] <= lo;
}

bool inBoxdot(const BoxdotSpec& spec, const Box& b) {
  for (int a = 0; a < b.ambient(); ++a)
    if (inHalf(spec, false, a, b) || inHalf(spec, true, a, b)) return true;
  return false;
}

BoxdotFamily boxdotFamily(const BoxdotSpec& spec) {
  spec.validate();
  BoxdotFamily f;
  f.grid = standardGrid(spec.extents);
  f.boxdot = f.grid.filter([&](const Box& b) { return inBoxdot(spec, b); });
  f.window = restrictToWindow(f.grid, spec.windowBox());
  for (int a = 0; a < static_cast<int>(spec.extents.size()); ++a) {
    f.lower.push_back(f.grid.filter([&](const Box& b) { return inHalf(spec, false, a, b); }));
    f.upper.push_back(f.grid.filter([&](const Box& b) { return inHalf(spec, true, a, b); }));
  }
  return f;
}

std::vector<int> standardExtents(const Shape& source) {
  auto bb = source.boundingBox();
  if (!bb) throw PasteboxError("empty source has no extents");
  std::vector<int> out;
  for (int a = 0; a < source.dim(); ++a) {
    if (bb->lo[a] != 0) throw PasteboxError("source is not a standard grid");
    out.push_back(bb->hi[a]);
  }
  if (!(standardGrid(out) == source)) throw PasteboxError("source is not a standard grid");
  return out;
}

std::optional<GridPullback> gridPullback(const ShapeMap& f, const ShapeMap& g) {
  if (f.target.dim() != g.target.dim() || !(f.target == g.target)) throw PasteboxError("gridPullback: maps have different targets");
  for (const ShapeMap* m : {&f, &g}) {
    const MapReport r = validateShapeMap(*m);
    if (!r.valid) throw PasteboxError("gridPullback: invalid map: " + r.violation);
    if (!isInjective(*m)) throw PasteboxError("gridPullback: map is not injective");
  }
  const auto tf = tupleOf(f, standardExtents(f.source));
  const auto tg = tupleOf(g, standardExtents(g.source));
  if (!tf || !tg) throw PasteboxError("gridPullback: map is not coordinatewise");

  GridPullback p;
  Simplex legF, legG;
  const int d = f.target.dim();
  for (int a = 0; a < d; ++a) {
    const auto& fa = tf->maps[static_cast<std::size_t>(a)];
    const auto& ga = tg->maps[static_cast<std::size_t>(a)];
    std::vector<Coord> common;
    std::set_intersection(fa.begin(), fa.end(), ga.begin(), ga.end(), std::back_inserter(common));
    if (common.empty()) return std::nullopt;
    std::vector<Coord> rf, rg;
    for (Coord c : common) {
      rf.push_back(static_cast<Coord>(std::lower_bound(fa.begin(), fa.end(), c) - fa.begin()));
      rg.push_back(static_cast<Coord>(std::lower_bound(ga.begin(), ga.end(), c) - ga.begin()));
    }
    p.level.push_back(static_cast<int>(common.size()) - 1);
    p.intersectedImages.push_back(std::move(common));
    legF.maps.push_back(std::move(rf));
    legG.maps.push_back(std::move(rg));
  }
  const Shape apex = standardGrid(p.level);
  p.toF = productMap(apex, f.source, legF);
  p.toG = productMap(apex, g.source, legG);
  p.tupleF = *tf;
  p.tupleG = *tg;
  return p;
}

}  // namespace pastebox
