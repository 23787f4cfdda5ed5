#include "pastebox/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <unordered_set>

namespace pastebox {

std::optional<EntireSubshape> entireSubshape(const Shape& shape, const Box& window) {
  if (window.ambient() != shape.dim()) throw PasteboxError("entireSubshape: dimension mismatch");
  for (const Box& f : cornerSubboxes(window))
    if (!(f == window) && !shape.contains(f)) return std::nullopt;
  EntireSubshape e{restrictToWindow(shape, window), {}};
  e.witness.window = window;
  e.witness.k = window.dimension();
  e.witness.closed = shape.contains(window);
  e.witness.open = e.shape.boxesOfDimension(e.witness.k).empty();
  return e;
}

std::vector<Box> entireWindows(const Shape& shape, int k) {
  if (k < 0 || k > shape.dim()) throw PasteboxError("entireWindows: k out of range");
  const auto vertices = shape.vertices();
  std::vector<Box> out;
  for (const Vertex& alpha : vertices) {
    for (const Vertex& omega : vertices) {
      if (!alpha.leq(omega)) continue;
      const Box window(alpha, omega);
      if (window.dimension() != k) continue;
      bool ok = true;
      for (const Box& f : facets(window))
        if (!shape.contains(f)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(window);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool sameStrictSet(const Box& a, const Box& b) {
  for (int i = 0; i < a.ambient(); ++i)
    if (a.strictIn(i) != b.strictIn(i)) return false;
  return true;
}

bool minimalAmong(const Box& window, const std::vector<Box>& windows) {
  for (const Box& other : windows)
    if (!(other == window) && sameStrictSet(other, window) && window.contains(other)) return false;
  return true;
}

}  // namespace

bool isVertebraWindow(const Shape& shape, const Box& window) {
  return minimalAmong(window, entireWindows(shape, window.dimension()));
}

std::vector<EntireSubshape> enumerateVertebrae(const Shape& shape, int k) {
  const auto windows = entireWindows(shape, k);
  std::vector<EntireSubshape> out;
  for (const Box& w : windows)
    if (minimalAmong(w, windows)) out.push_back(*entireSubshape(shape, w));
  return out;
}

std::vector<EntireSubshape> closedEntireSubshapes(const Shape& shape, int k) {
  std::vector<EntireSubshape> out;
  for (const Box& w : shape.boxesOfDimension(k)) out.push_back(*entireSubshape(shape, w));
  return out;
}

Shape viewInOwnDimension(const EntireSubshape& e) {
  std::vector<int> axes;
  for (int a = 0; a < e.witness.window.ambient(); ++a)
    if (e.witness.window.strictIn(a)) axes.push_back(a);
  return projectAxes(e.shape, axes);
}

Shape shapeBoundary(const Shape& shape) {
  const auto bb = shape.boundingBox();
  if (!bb) return shape;
  return shape.filter([&](const Box& b) {
    for (int a = 0; a < b.ambient(); ++a)
      if (b.lo[a] == b.hi[a] && (b.lo[a] == bb->lo[a] || b.lo[a] == bb->hi[a])) return true;
    return false;
  });
}

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::uint64_t defaultBudget() {
  const char* env = std::getenv("PASTEBOX_BUDGET");
  if (!env || !*env) return 10'000'000ULL;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw PasteboxError("");
    return v;
  } catch (const std::exception&) {
    throw PasteboxError(std::string("PASTEBOX_BUDGET is not a positive integer: ") + env);
  }
}

int Decomposition::height() const {
  if (leaf) return 0;
  // A cell certified over its own boundary.
  if (pieces.size() == 1 && pieces[0].leaf && pieces[0].shape == shape) return 0;
  int h = 0;
  for (const auto& p : pieces) h = std::max(h, p.height());
  return 1 + h;
}

namespace {

std::vector<Box> cellWindows(const std::vector<std::vector<Coord>>& lines) {
  IntervalChoices choices;
  for (const auto& l : lines) {
    std::vector<std::pair<Coord, Coord>> steps;
    for (std::size_t i = 0; i + 1 < l.size(); ++i) steps.emplace_back(l[i], l[i + 1]);
    choices.push_back(std::move(steps));
  }
  return productBoxes(choices);
}

bool pinnedTo(const Box& b, const std::vector<std::vector<Coord>>& lines) {
  for (int a = 0; a < b.ambient(); ++a) {
    if (b.lo[a] != b.hi[a]) continue;
    const auto& l = lines[static_cast<std::size_t>(a)];
    if (std::binary_search(l.begin(), l.end(), b.lo[a])) return true;
  }
  return false;
}

bool isCellShape(const Shape& shape) {
  if (shape.dim() == 0) return shape.size() == 1;
  const auto w = detectGrid(shape);
  return w && w->isCell();
}

Shape uniteBoxes(const Shape& base, const std::vector<Shape>& parts) {
  std::vector<Box> all(base.boxes().begin(), base.boxes().end());
  for (const Shape& p : parts) all.insert(all.end(), p.boxes().begin(), p.boxes().end());
  return close(base.dim(), all);
}

}  // namespace

Shape baseForLines(const Shape& shape, const std::vector<std::vector<Coord>>& lines) {
  const int d = shape.dim();
  return shape.filter([&](const Box& b) { return b.dimension() < d && pinnedTo(b, lines); });
}

AdmittabilityEngine::AdmittabilityEngine(std::uint64_t budget) : budget_(budget) {}

std::optional<int> AdmittabilityEngine::tryLines(const Shape& shape, const std::vector<std::vector<Coord>>& lines) {
  if (++nodes_ > budget_) throw BudgetExhausted{};
  const int d = shape.dim();
  for (const Box& b : latticeBoxes(lines, d - 1))
    if (!shape.contains(b)) return std::nullopt;
  const Shape base = baseForLines(shape, lines);
  std::vector<Shape> pieces;
  for (const Box& w : cellWindows(lines)) pieces.push_back(restrictToWindow(shape, w));
  if (!(uniteBoxes(base, pieces) == shape)) return std::nullopt;
  int h = 0;
  for (const Shape& p : pieces) {
    const Entry e = solve(p);
    if (!e.height) return std::nullopt;
    h = std::max(h, *e.height);
  }
  return 1 + h;
}

const AdmittabilityEngine::Entry& AdmittabilityEngine::solve(const Shape& shape) {
  if (auto it = memo_.find(shape); it != memo_.end()) return it->second;
  Entry e;
  const int d = shape.dim();
  const auto bb = shape.boundingBox();
  if (shape.empty()) {
  } else if (isCellShape(shape)) {
    e.height = 0;
  } else if (d > 0 && bb->dimension() == d) {
    // Interior values whose full hyperplane section of the bounding box is
    // present; every base line must be one of these.
    std::vector<std::vector<Coord>> candidates;
    const auto values = shape.coordinateValues();
    for (int a = 0; a < d; ++a) {
      std::vector<Coord> c;
      for (Coord v : values[static_cast<std::size_t>(a)]) {
        if (v <= bb->lo[a] || v >= bb->hi[a]) continue;
        if (shape.contains(Box(bb->lo.with(a, v), bb->hi.with(a, v)))) c.push_back(v);
      }
      if (c.size() > 20) throw PasteboxError("admittability: too many candidate lines");
      candidates.push_back(std::move(c));
    }
    std::vector<std::vector<std::uint32_t>> combos{{}};
    for (const auto& c : candidates) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& prefix : combos)
        for (std::uint32_t m = 0; m < (1u << c.size()); ++m) {
          auto extended = prefix;
          extended.push_back(m);
          next.push_back(std::move(extended));
        }
      combos = std::move(next);
    }
    auto weight = [](const std::vector<std::uint32_t>& masks) {
      int w = 0;
      for (auto m : masks) w += std::popcount(m);
      return w;
    };
    std::stable_sort(combos.begin(), combos.end(), [&](const auto& x, const auto& y) { return weight(x) > weight(y); });
    for (const auto& masks : combos) {
      if (weight(masks) == 0) continue;
      std::vector<std::vector<Coord>> lines;
      for (int a = 0; a < d; ++a) {
        std::vector<Coord> l{bb->lo[a]};
        const auto& c = candidates[static_cast<std::size_t>(a)];
        for (std::size_t i = 0; i < c.size(); ++i)
          if (masks[static_cast<std::size_t>(a)] >> i & 1u) l.push_back(c[i]);
        l.push_back(bb->hi[a]);
        lines.push_back(std::move(l));
      }
      const auto h = tryLines(shape, lines);
      if (h && (!e.height || *h < *e.height)) {
        e.height = h;
        e.lines = lines;
        if (*h == 1) break;
      }
    }
  }
  return memo_.emplace(shape, std::move(e)).first->second;
}

Decomposition AdmittabilityEngine::build(const Shape& shape) {
  const Entry e = solve(shape);
  Decomposition dec;
  dec.shape = shape;
  if (*e.height == 0) {
    dec.leaf = true;
    return dec;
  }
  dec.base = baseForLines(shape, e.lines);
  dec.baseWitness = *detectGrid(dec.base);
  for (const Box& w : cellWindows(e.lines)) dec.pieces.push_back(build(restrictToWindow(shape, w)));
  return dec;
}

Decided<int> AdmittabilityEngine::height(const Shape& shape) {
  try {
    const Entry e = solve(shape);
    if (!e.height) return {Verdict::No, std::nullopt};
    return {Verdict::Yes, e.height};
  } catch (const BudgetExhausted&) {
    return {Verdict::Inconclusive, std::nullopt};
  }
}

Verdict AdmittabilityEngine::admittable(const Shape& shape) { return height(shape).verdict; }

Decided<Decomposition> AdmittabilityEngine::decomposition(const Shape& shape) {
  const auto h = height(shape);
  if (h.verdict != Verdict::Yes) return {h.verdict, std::nullopt};
  if (*h.value > 0) return {Verdict::Yes, build(shape)};
  Decomposition leaf;
  leaf.shape = shape;
  leaf.leaf = true;
  if (shape.dim() == 0) return {Verdict::Yes, leaf};
  // A cell is its own piece over its open boundary.
  Decomposition node;
  node.shape = shape;
  const auto w = *detectGrid(shape);
  node.base = baseForLines(shape, w.lines);
  node.baseWitness = *detectGrid(node.base);
  node.pieces.push_back(leaf);
  return {Verdict::Yes, node};
}

Decided<Filtration> AdmittabilityEngine::filtration(const Shape& shape) {
  if (auto w = detectGrid(shape)) return {Verdict::Yes, Filtration{shape, *w, {}}};
  const auto dec = decomposition(shape);
  if (dec.verdict != Verdict::Yes) return {dec.verdict, std::nullopt};
  return {Verdict::Yes, flatten(*dec.value)};
}

namespace {

void appendSteps(const Decomposition& piece, std::vector<FiltrationStep>& steps) {
  if (piece.leaf) {
    const auto w = detectGrid(piece.shape);
    if (w && w->closed) steps.push_back({piece.shape, *w});
    return;
  }
  steps.push_back({piece.base, piece.baseWitness});
  for (const auto& p : piece.pieces) appendSteps(p, steps);
}

}  // namespace

Filtration flatten(const Decomposition& dec) {
  Filtration f;
  if (dec.leaf) {
    f.base = dec.shape;
    f.baseWitness = *detectGrid(dec.shape);
    return f;
  }
  f.base = dec.base;
  f.baseWitness = dec.baseWitness;
  for (const auto& p : dec.pieces) appendSteps(p, f.steps);
  return f;
}

std::string validateFiltration(const Shape& shape, const Filtration& f) {
  const auto bw = detectGrid(f.base);
  if (!bw || !(*bw == f.baseWitness)) return "base is not the witnessed grid";
  if (!f.base.isSubshapeOf(shape)) return "base is not a subshape";
  Shape current = f.base;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& step = f.steps[i];
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    const auto w = detectGrid(step.grid);
    if (!w || !(*w == step.witness)) return at + "not the witnessed grid";
    if (!step.grid.isSubshapeOf(shape)) return at + "grid is not a subshape";
    const Shape boundary = gridBoundary(step.grid, step.witness);
    if (!(intersect(current, step.grid) == boundary)) return at + "intersection is not the grid boundary";
    const auto e = entireSubshape(current, step.witness.corners());
    if (!e || !(e->shape == boundary)) return at + "boundary is not entire in the previous stage";
    if (!e->witness.open) return at + "boundary is not open";
    if (!isVertebraWindow(current, step.witness.corners())) return at + "boundary is not a vertebra";
    current = unite(current, step.grid);
  }
  if (!(current == shape)) return "final stage differs from the shape";
  return {};
}

std::string validateDecomposition(const Shape& shape, const Decomposition& dec) {
  if (!(dec.shape == shape)) return "certificate is for a different shape";
  if (dec.leaf) return isCellShape(shape) ? "" : "leaf is not a cell";
  const auto bw = detectGrid(dec.base);
  if (!bw || !(*bw == dec.baseWitness) || bw->closed) return "base is not the witnessed open grid";
  if (!dec.base.isSubshapeOf(shape)) return "base is not a subshape";
  std::set<Box> windows;
  std::vector<Shape> parts;
  for (const auto& p : dec.pieces) {
    if (!p.shape.isSubshapeOf(shape)) return "piece is not a subshape";
    const Box window = *p.shape.boundingBox();
    if (!windows.insert(window).second) return "pieces share a base vertebra";
    const Shape boundary = shapeBoundary(p.shape);
    if (!(intersect(dec.base, p.shape) == boundary)) return "piece meets the base outside its boundary";
    const auto e = entireSubshape(dec.base, window);
    if (!e || !(e->shape == boundary) || !e->witness.open || !isVertebraWindow(dec.base, window))
      return "piece boundary is not an open vertebra of the base";
    const std::string sub = validateDecomposition(p.shape, p);
    if (!sub.empty()) return "piece " + toString(window) + ": " + sub;
    parts.push_back(p.shape);
  }
  if (!(uniteBoxes(dec.base, parts) == shape)) return "base and pieces do not recover the shape";
  return {};
}

Decided<Filtration> isAdmittable(const Shape& shape) {
  AdmittabilityEngine engine;
  return engine.filtration(shape);
}

Decided<Decomposition> findDecomposition(const Shape& shape) {
  AdmittabilityEngine engine;
  return engine.decomposition(shape);
}

Decided<int> heightOf(const Shape& shape) {
  AdmittabilityEngine engine;
  return engine.height(shape);
}

namespace {

/// Runs the admittability test over the views of closed k-entire subshapes.
StructureReport closedEntireViewsAdmittable(const Shape& shape, int kmin, int kmax, AdmittabilityEngine& engine) {
  StructureReport report{Verdict::Yes, {}, {}};
  for (int k = kmin; k <= kmax; ++k) {
    for (const auto& e : closedEntireSubshapes(shape, k)) {
      const Verdict v = engine.admittable(viewInOwnDimension(e));
      if (v == Verdict::No)
        return {Verdict::No, "closed " + std::to_string(k) + "-entire subshape is not admittable", e.witness.window};
      if (v == Verdict::Inconclusive && report.verdict == Verdict::Yes)
        report = {Verdict::Inconclusive, "search budget exhausted", e.witness.window};
    }
  }
  return report;
}

}  // namespace

StructureReport isComposable(const Shape& shape, AdmittabilityEngine& engine) {
  if (shape.empty()) return {Verdict::No, "empty shape", {}};
  const Verdict adm = engine.admittable(shape);
  if (adm == Verdict::No) return {Verdict::No, "not admittable", {}};
  const Box bb = *shape.boundingBox();
  if (!shape.contains(bb)) return {Verdict::No, "bounding box is absent", bb};
  auto rest = closedEntireViewsAdmittable(shape, 1, shape.dim() - 1, engine);
  if (rest.verdict == Verdict::No) return rest;
  if (adm == Verdict::Inconclusive) return {Verdict::Inconclusive, "search budget exhausted", {}};
  return rest;
}

StructureReport isComposable(const Shape& shape) {
  AdmittabilityEngine engine;
  return isComposable(shape, engine);
}

StructureReport isLocallyComposable(const Shape& shape, AdmittabilityEngine& engine) {
  if (shape.empty()) throw PasteboxError("local composability of the empty shape is degenerate");
  return closedEntireViewsAdmittable(shape, 1, shape.dim(), engine);
}

StructureReport isLocallyComposable(const Shape& shape) {
  AdmittabilityEngine engine;
  return isLocallyComposable(shape, engine);
}

DivisionReport checkDivisionPair(const DivisionPair& pair, AdmittabilityEngine& engine) {
  const Shape& K = pair.K;
  const Shape& J = pair.J;
  const Shape& I = pair.ambient;
  if (K.dim() != J.dim() || K.dim() != I.dim()) throw PasteboxError("division pair: dimension mismatch");
  DivisionReport r;
  auto fail = [&](std::string why) { r.failures.push_back(std::move(why)); };

  if (J.empty()) {
    fail("J is empty");
    return r;
  }
  const Box corners = *J.boundingBox();
  const Shape boundary = shapeBoundary(J);
  if (!(unite(K, J) == I)) fail("K and J do not recover the ambient shape");
  if (!(intersect(K, J) == boundary)) fail("K meets J outside the boundary of J");
  const auto e = entireSubshape(K, corners);
  if (!e || !(e->shape == boundary)) fail("boundary of J is not entire in K");
  else if (!e->witness.open) fail("boundary of J is not open in K");
  else if (!isVertebraWindow(K, corners)) fail("boundary of J is not a vertebra of K");
  bool inconclusive = false;
  for (const auto* part : {&K, &J}) {
    const Verdict v = engine.admittable(*part);
    if (v == Verdict::No) fail(part == &K ? "K is not admittable" : "J is not admittable");
    if (v == Verdict::Inconclusive) inconclusive = true;
  }
  r.definitionHolds = r.failures.empty() && !inconclusive;

  r.membershipHolds = true;
  for (const Box& b : I.boxes()) {
    bool outside = false;
    for (int a = 0; a < b.ambient(); ++a)
      if (b.hi[a] <= corners.lo[a] || b.lo[a] >= corners.hi[a]) outside = true;
    if (outside != K.contains(b)) {
      r.membershipHolds = false;
      fail("membership criterion fails at " + toString(b));
      break;
    }
  }
  if (!r.failures.empty()) r.verdict = Verdict::No;
  else r.verdict = inconclusive ? Verdict::Inconclusive : Verdict::Yes;
  return r;
}

DivisionReport checkDivisionPair(const DivisionPair& pair) {
  AdmittabilityEngine engine;
  return checkDivisionPair(pair, engine);
}

CoverReport checkCovering(const Shape& shape, const std::vector<Shape>& parts) {
  CoverReport r;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Shape& part = parts[i];
    if (!part.isSubshapeOf(shape)) throw PasteboxError("covering: part " + std::to_string(i) + " is not a subshape");
    for (const Box& w : part.boxes())
      if (!(restrictToWindow(part, w) == restrictToWindow(shape, w)))
        r.violations.push_back({1, static_cast<int>(i), w});
  }
  for (int k = 0; k <= shape.dim(); ++k) {
    for (const auto& v : enumerateVertebrae(shape, k)) {
      if (!v.witness.closed) continue;
      const bool covered =
          std::any_of(parts.begin(), parts.end(), [&](const Shape& p) { return v.shape.isSubshapeOf(p); });
      if (!covered) r.violations.push_back({2, -1, v.witness.window});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

UnionReport verifyVertebraUnion(const Shape& shape, AdmittabilityEngine& engine) {
  UnionReport r;
  std::vector<Shape> parts;
  const bool composable = !shape.empty() && isComposable(shape, engine).verdict == Verdict::Yes;
  const bool local = !composable && !shape.empty() && isLocallyComposable(shape, engine).verdict == Verdict::Yes;
  if (local) {
    r.mode = "closed k-vertebrae";
    for (int k = 0; k <= shape.dim(); ++k)
      for (const auto& v : enumerateVertebrae(shape, k))
        if (v.witness.closed) parts.push_back(v.shape);
  } else {
    r.mode = "vertebrae";
    for (const auto& v : enumerateVertebrae(shape, shape.dim())) parts.push_back(v.shape);
  }
  const Shape u = unite(shape.dim(), parts);
  r.residual = shape.difference(u);
  r.holds = r.residual.empty() && u.isSubshapeOf(shape);
  return r;
}

UnionReport verifyVertebraUnion(const Shape& shape) {
  AdmittabilityEngine engine;
  return verifyVertebraUnion(shape, engine);
}

const char* toString(FillBranch b) {
  switch (b) {
    case FillBranch::Truncated: return "truncated";
    case FillBranch::IntoK: return "image-in-K";
    case FillBranch::DivisionMap: return "division-map";
    case FillBranch::None: return "none";
  }
  return "?";
}

namespace {

/// Strictly increasing subsets of `values` containing `required`, with at
/// least two elements.
std::vector<std::vector<Coord>> supersets(const std::vector<Coord>& values, const std::set<Coord>& required) {
  std::vector<Coord> optional;
  for (Coord v : values)
    if (!required.count(v)) optional.push_back(v);
  if (optional.size() > 20) throw PasteboxError("too many coordinate values");
  std::vector<std::vector<Coord>> out;
  for (std::uint32_t m = 0; m < (1u << optional.size()); ++m) {
    std::set<Coord> s = required;
    for (std::size_t i = 0; i < optional.size(); ++i)
      if (m >> i & 1u) s.insert(optional[i]);
    if (s.size() >= 2) out.emplace_back(s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void requireSubshape(const Shape& F, const DivisionPair& pair) {
  if (!F.isSubshapeOf(pair.ambient)) throw PasteboxError("fillable: F is not a subshape of the ambient shape");
}

}  // namespace

std::vector<Simplex> dShapingMaps(const Shape& shape) {
  const int d = shape.dim();
  if (d == 0) return {};
  std::vector<std::set<Coord>> required(static_cast<std::size_t>(d));
  for (const Box& b : shape.boxesOfDimension(d))
    for (int a = 0; a < d; ++a) {
      required[static_cast<std::size_t>(a)].insert(b.lo[a]);
      required[static_cast<std::size_t>(a)].insert(b.hi[a]);
    }
  const auto values = shape.coordinateValues();
  std::vector<std::vector<std::vector<Coord>>> options;
  for (int a = 0; a < d; ++a) options.push_back(supersets(values[static_cast<std::size_t>(a)], required[static_cast<std::size_t>(a)]));
  std::vector<Simplex> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (const auto& o : options)
    if (o.empty()) return out;
  while (true) {
    Simplex s;
    for (int a = 0; a < d; ++a) s.maps.push_back(options[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]]);
    if (imagesSatisfyBoxCondition(shape, s.maps)) out.push_back(std::move(s));
    int a = d - 1;
    for (; a >= 0; --a) {
      auto& i = idx[static_cast<std::size_t>(a)];
      if (++i < options[static_cast<std::size_t>(a)].size()) break;
      i = 0;
    }
    if (a < 0) break;
  }
  return out;
}

FillableReport isFillable(const Shape& F, const DivisionPair& pair) {
  requireSubshape(F, pair);
  const int d = F.dim();
  if (F.boxesOfDimension(d).empty()) return {true, FillBranch::Truncated, {}, {}};
  const Box corners = *pair.J.boundingBox();
  const auto maps = dShapingMaps(F);
  for (const Simplex& f : maps)
    if (imagesSatisfyBoxCondition(pair.K, f.maps)) return {true, FillBranch::IntoK, f, {}};
  for (const Simplex& f : maps) {
    BoxdotSpec spec;
    bool ok = true;
    for (int a = 0; a < d && ok; ++a) {
      const auto& im = f.maps[static_cast<std::size_t>(a)];
      const Coord lo = std::max(im.front(), corners.lo[a]);
      const Coord hi = std::min(im.back(), corners.hi[a]);
      const auto pl = std::lower_bound(im.begin(), im.end(), lo);
      const auto ph = std::lower_bound(im.begin(), im.end(), hi);
      if (!(lo < hi) || pl == im.end() || *pl != lo || ph == im.end() || *ph != hi) {
        ok = false;
        break;
      }
      spec.extents.push_back(static_cast<int>(im.size()) - 1);
      spec.window.emplace_back(static_cast<Coord>(pl - im.begin()), static_cast<Coord>(ph - im.begin()));
    }
    if (ok) return {true, FillBranch::DivisionMap, f, spec};
  }
  return {};
}

FillableReport isFillableByDefinition(const Shape& F, const DivisionPair& pair) {
  requireSubshape(F, pair);
  const int d = F.dim();
  if (F.boxesOfDimension(d).empty()) return {true, FillBranch::Truncated, {}, {}};
  const auto maps = dShapingMaps(F);
  for (const Simplex& f : maps)
    if (imagesSatisfyBoxCondition(pair.K, f.maps)) return {true, FillBranch::IntoK, f, {}};
  for (const Simplex& f : maps) {
    const std::vector<int> extents = f.level();
    const Shape grid = standardGrid(extents);
    std::vector<std::pair<Box, Box>> images;
    for (const Box& b : grid.boxes()) images.emplace_back(b, Box(f.at(b.lo), f.at(b.hi)));
    IntervalChoices windows;
    for (int n : extents) {
      std::vector<Coord> all;
      for (int i = 0; i <= n; ++i) all.push_back(i);
      std::vector<std::pair<Coord, Coord>> strict;
      for (const auto& p : orderedPairs(all))
        if (p.first < p.second) strict.push_back(p);
      windows.push_back(std::move(strict));
    }
    for (const Box& w : productBoxes(windows)) {
      BoxdotSpec spec{extents, {}};
      for (int a = 0; a < d; ++a) spec.window.emplace_back(w.lo[a], w.hi[a]);
      bool ok = true;
      for (const auto& [b, image] : images) {
        if (pair.J.contains(image) != w.contains(b)) {
          ok = false;
          break;
        }
        if (b.dimension() == d && pair.K.contains(image) != inBoxdot(spec, b)) {
          ok = false;
          break;
        }
      }
      if (ok) return {true, FillBranch::DivisionMap, f, spec};
    }
  }
  return {};
}

std::size_t countClosedSubgridImages(const Shape& shape) {
  const int d = shape.dim();
  if (d == 0) return 0;
  const auto values = shape.coordinateValues();
  std::vector<std::vector<std::vector<Coord>>> options;
  for (const auto& v : values) options.push_back(supersets(v, {}));
  std::size_t count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (const auto& o : options)
    if (o.empty()) return 0;
  while (true) {
    std::vector<std::vector<Coord>> lines;
    for (int a = 0; a < d; ++a) lines.push_back(options[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]]);
    if (imagesSatisfyBoxCondition(shape, lines)) ++count;
    int a = d - 1;
    for (; a >= 0; --a) {
      auto& i = idx[static_cast<std::size_t>(a)];
      if (++i < options[static_cast<std::size_t>(a)].size()) break;
      i = 0;
    }
    if (a < 0) break;
  }
  return count;
}

}  // namespace pastebox
