#include "pastebox/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <unordered_set>

#include "oracle.hpp"
#include "pastebox/fixtures.hpp"
#include "pastebox/nerve.hpp"
#include "pastebox/toolkit.hpp"

namespace pastebox {

using nlohmann::json;

const char* toString(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

json SuiteReport::toJson() const {
  json j = {{"schema", kReportSchema}, {"seed", seed}, {"passed", passed()}};
  j["checks"] = json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"title", c.title},
                           {"status", toString(c.status)},
                           {"elapsed_ms", c.elapsedMs},
                           {"details", c.details}});
  return j;
}

namespace {

// Values established by the brute-force oracle and frozen here.
constexpr std::size_t kPinwheelVertebrae = 5;
constexpr std::size_t kPinwheelSubgrids = 6;
// Fillability sweep sizes: subshapes of F are enumerated outright up to this
// many, and sampled otherwise.
constexpr std::uint64_t kExhaustiveSubshapes = 20000;
constexpr std::size_t kSampledSubshapes = 2000;
constexpr int kMaxRecordedFailures = 20;

json boxJson(const Box& b) { return json::array({b.lo.coords(), b.hi.coords()}); }

json boxesJson(const std::vector<Box>& bs) {
  json j = json::array();
  for (const Box& b : bs) j.push_back(boxJson(b));
  return j;
}

/// Collects expectation failures and recorded values for one check.
class Ctx {
 public:
  explicit Ctx(std::uint64_t seed) : seed(seed) {}

  bool expect(bool ok, const std::string& what, json payload = nullptr) {
    if (ok) return true;
    ++failureCount;
    if (failures.size() < kMaxRecordedFailures) {
      json f = {{"expectation", what}};
      if (!payload.is_null()) f["counterexample"] = std::move(payload);
      failures.push_back(std::move(f));
    }
    return false;
  }

  std::uint64_t seed;
  int failureCount = 0;
  json failures = json::array();
  json recorded = json::object();
};

std::vector<std::vector<int>> levelsUpTo(int d, int maxSum) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int a, int left) {
    if (a == d) {
      out.push_back(n);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[static_cast<std::size_t>(a)] = v;
      rec(a + 1, left - v);
    }
  };
  rec(0, maxSum);
  return out;
}

std::vector<std::vector<int>> boxLevels(int d, int maxEach, int minEach = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(static_cast<std::size_t>(d), minEach);
  while (true) {
    out.push_back(n);
    int a = d - 1;
    for (; a >= 0; --a) {
      if (++n[static_cast<std::size_t>(a)] <= maxEach) break;
      n[static_cast<std::size_t>(a)] = minEach;
    }
    if (a < 0) return out;
  }
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

json linesJson(const std::vector<std::vector<Coord>>& lines) { return lines; }

bool injective(const Simplex& s) {
  for (const auto& m : s.maps)
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) return false;
  return true;
}

// ---------------------------------------------------------------------------

void pinwheel(Ctx& c) {
  const Shape pw = fixture("PW");
  const Shape pwo = fixture("PWo");
  const Box full(Vertex{0, 0}, Vertex{3, 3});
  const std::vector<Box> gens{Box(Vertex{0, 0}, Vertex{2, 1}), Box(Vertex{2, 0}, Vertex{3, 2}),
                              Box(Vertex{1, 1}, Vertex{2, 2}), Box(Vertex{0, 1}, Vertex{1, 3}),
                              Box(Vertex{1, 2}, Vertex{3, 3}), full};
  const Shape closed = close(2, gens);
  const auto naive = oracle::naiveClose(2, gens);
  c.expect(closed == pw, "close(generators) equals the PW fixture");
  c.expect(std::vector<Box>(naive.begin(), naive.end()) ==
               std::vector<Box>(closed.boxes().begin(), closed.boxes().end()),
           "close(generators) agrees with the naive closure");
  c.expect(pwo.isSubshapeOf(pw) && pw.difference(pwo) == std::vector<Box>{full},
           "PWo is PW minus exactly the full box", boxesJson(pw.difference(pwo)));
  AdmittabilityEngine engine;
  const Verdict adm = engine.admittable(pw);
  c.expect(adm == Verdict::No, "PW is not admittable", toString(adm));
  const auto lc = isLocallyComposable(pwo, engine);
  c.expect(lc.verdict == Verdict::Yes, "PWo is locally composable", lc.reason);
  std::vector<Box> wPw, wPwo;
  for (const auto& v : enumerateVertebrae(pw, 2)) wPw.push_back(v.witness.window);
  for (const auto& v : enumerateVertebrae(pwo, 2)) wPwo.push_back(v.witness.window);
  c.expect(wPw == wPwo, "PW and PWo have the same vertebra windows", {{"PW", boxesJson(wPw)}, {"PWo", boxesJson(wPwo)}});
  const auto u = verifyVertebraUnion(pw, engine);
  c.expect(!u.holds && u.residual == std::vector<Box>{full}, "PW differs from its vertebra union by the full box",
           boxesJson(u.residual));
  const auto uo = verifyVertebraUnion(pwo, engine);
  c.expect(uo.holds && uo.residual.empty(), "PWo is the union of its vertebrae", boxesJson(uo.residual));
  c.recorded["pw_boxes"] = pw.size();
  c.recorded["vertebra_windows"] = boxesJson(wPw);
}

void composable(Ctx& c) {
  AdmittabilityEngine engine;
  for (const std::string name : {"EX_I", "EX_J", "TRIANGLE"}) {
    const Shape s = fixture(name);
    const auto r = isComposable(s, engine);
    c.expect(r.verdict == Verdict::Yes, name + " is composable", r.reason);
    const auto u = verifyVertebraUnion(s, engine);
    c.expect(u.holds, name + " is the union of its vertebrae", boxesJson(u.residual));
  }
  const auto h = engine.height(fixture("EX_I"));
  c.expect(h.verdict == Verdict::Yes && h.value == 3, "EX_I has minimal height 3",
           h.value ? json(*h.value) : json(toString(h.verdict)));
  c.recorded["ex_i_height"] = h.value ? json(*h.value) : json(nullptr);
}

void grids(Ctx& c) {
  auto expectGrid = [&](const std::string& name, std::optional<GridWitness> want) {
    const auto got = detectGrid(fixture(name));
    json payload = got ? json{{"lines", linesJson(got->lines)}, {"closed", got->closed}} : json("none");
    c.expect(got == want, name + " witness", payload);
  };
  expectGrid("GRID_CLOSED", GridWitness{{{0, 1, 2, 4}, {0, 2}}, true});
  expectGrid("GRID_OPEN", GridWitness{{{0, 2, 3, 5}, {0, 1, 2}}, false});
  expectGrid("NONGRID", std::nullopt);
  for (const auto& n : boxLevels(2, 3, 1)) {
    GridWitness want{{}, true};
    for (int na : n) {
      std::vector<Coord> l;
      for (int i = 0; i <= na; ++i) l.push_back(i);
      want.lines.push_back(l);
    }
    c.expect(detectGrid(standardGrid(n)) == want, "standard grid witness", n);
  }
}

void nerveCounts(Ctx& c) {
  int checked = 0;
  for (const auto& m : boxLevels(2, 3))
    for (const auto& n : boxLevels(2, 3)) {
      const Shape sq = standardGrid(m);
      std::uint64_t formula = 1, brute = 1;
      for (std::size_t a = 0; a < 2; ++a) {
        formula *= binom(n[a] + m[a] + 1, n[a] + 1);
        brute *= oracle::monotoneMapCount(n[a], m[a]);
      }
      const std::size_t got = nerveLevel(sq, n).size();
      c.expect(got == formula && brute == formula, "nerve level of a standard grid",
               {{"m", m}, {"n", n}, {"got", got}, {"formula", formula}, {"brute", brute}});
      ++checked;
    }
  c.recorded["pairs"] = checked;
}

std::vector<std::string> allFixtures() { return fixtureNames(); }

void segal(Ctx& c) {
  int levels = 0;
  for (const auto& name : allFixtures()) {
    NerveCache cache(fixture(name));
    for (const auto& n : levelsUpTo(cache.shape().dim(), 5)) {
      c.expect(segalCheck(cache, n), "Segal maps are bijections", {{"fixture", name}, {"level", n}});
      ++levels;
    }
  }
  c.recorded["levels"] = levels;
}

void truncation(Ctx& c) {
  int cases = 0;
  for (const auto& name : allFixtures()) {
    const Shape s = fixture(name);
    for (int k = 0; k <= s.dim(); ++k) {
      const Shape t = truncate(s, k);
      for (const auto& n : levelsUpTo(s.dim(), 4)) {
        const auto full = nerveLevel(s, n);
        std::vector<Simplex> filtered;
        for (const Simplex& x : full.simplices)
          if (simplexDimension(x) <= k) filtered.push_back(x);
        c.expect(filtered == nerveLevel(t, n).simplices, "dimension filter equals truncated nerve",
                 {{"fixture", name}, {"k", k}, {"level", n}});
        ++cases;
      }
    }
  }
  c.recorded["cases"] = cases;
}

std::vector<BoxdotSpec> allSpecs(int d, int maxExtent) {
  std::vector<BoxdotSpec> out;
  for (const auto& n : boxLevels(d, maxExtent, 1)) {
    IntervalChoices windows;
    for (int na : n) {
      std::vector<std::pair<Coord, Coord>> w;
      for (Coord lo = 0; lo <= na; ++lo)
        for (Coord hi = lo + 1; hi <= na; ++hi) w.emplace_back(lo, hi);
      windows.push_back(w);
    }
    for (const Box& w : productBoxes(windows)) {
      BoxdotSpec spec{n, {}};
      for (int a = 0; a < d; ++a) spec.window.emplace_back(w.lo[a], w.hi[a]);
      out.push_back(spec);
    }
  }
  return out;
}

json specJson(const BoxdotSpec& s) { return {{"extents", s.extents}, {"window", s.window}}; }

void division(Ctx& c) {
  int specs = 0, maps = 0;
  AdmittabilityEngine engine;
  for (const BoxdotSpec& spec : allSpecs(2, 3)) {
    ++specs;
    const auto fam = boxdotFamily(spec);
    const auto r = checkDivisionPair({fam.boxdot, fam.window, fam.grid}, engine);
    c.expect(r.verdict == Verdict::Yes && r.definitionHolds && r.membershipHolds, "boxdot pair is a division pair",
             {{"spec", specJson(spec)}, {"failures", r.failures}});
    const Box w = spec.windowBox();
    for (const Box& b : fam.grid.boxes()) {
      bool outside = false;
      for (int a = 0; a < 2; ++a) outside = outside || b.hi[a] <= w.lo[a] || b.lo[a] >= w.hi[a];
      c.expect(fam.boxdot.contains(b) == outside, "membership criterion",
               {{"spec", specJson(spec)}, {"box", boxJson(b)}});
    }
    std::vector<Shape> halves = fam.lower;
    halves.insert(halves.end(), fam.upper.begin(), fam.upper.end());
    for (const auto& n : boxLevels(2, 2)) {
      for (const Simplex& s : nerveLevel(fam.boxdot, n).simplices) {
        const bool factors =
            std::any_of(halves.begin(), halves.end(), [&](const Shape& m) { return satisfiesBoxCondition(m, s); });
        c.expect(factors, injective(s) ? "injective map factors through a half" : "simplex lies in a half",
                 {{"spec", specJson(spec)}, {"simplex", toString(s)}});
        maps += injective(s);
      }
    }
  }
  c.recorded["specs"] = specs;
  c.recorded["injective_maps"] = maps;
}

struct FillExample {
  std::string prefix;
  bool expected;
};

std::vector<Shape> sweepSubshapes(const Shape& shape, std::size_t maxBoxes) {
  std::vector<Shape> out;
  std::unordered_set<Shape, ShapeHash> seen;
  auto consider = [&](const Shape& s) {
    if (s.size() <= maxBoxes && seen.insert(s).second) out.push_back(s);
  };
  const auto bs = shape.boxes();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    consider(close(shape.dim(), {bs[i]}));
    for (std::size_t j = i + 1; j < bs.size(); ++j) consider(close(shape.dim(), {bs[i], bs[j]}));
  }
  for (int k = 0; k < shape.dim(); ++k) consider(truncate(shape, k));
  return out;
}

void fillable(Ctx& c) {
  AdmittabilityEngine engine;
  int compared = 0;
  std::map<std::string, int> branches;
  auto compare = [&](const Shape& F, const DivisionPair& pair, const json& where) {
    const auto crit = isFillable(F, pair);
    const auto def = isFillableByDefinition(F, pair);
    c.expect(crit.fillable == def.fillable, "criterion agrees with definition",
             {{"where", where}, {"criterion", crit.fillable}, {"definition", def.fillable}, {"F", boxesJson({F.boxes().begin(), F.boxes().end()})}});
    ++compared;
    ++branches[toString(crit.branch)];
    return crit;
  };
  std::mt19937_64 rng(c.seed ^ 0xf111ab1eULL);
  for (const FillExample& ex : {FillExample{"FILL1", true}, FillExample{"FILL2", false}}) {
    const DivisionPair pair{fixture(ex.prefix + "_K"), fixture(ex.prefix + "_J"), fixture(ex.prefix + "_I")};
    const auto dr = checkDivisionPair(pair, engine);
    c.expect(dr.verdict == Verdict::Yes, ex.prefix + " pair is a division pair", dr.failures);
    const auto r = compare(fixture(ex.prefix + "_F"), pair, ex.prefix);
    c.expect(r.fillable == ex.expected, ex.prefix + " example reproduces", toString(r.branch));
    if (ex.expected) c.expect(r.branch == FillBranch::DivisionMap, ex.prefix + " fills through a division map");
    for (const Shape& F : sweepSubshapes(pair.ambient, 40)) compare(F, pair, ex.prefix + " sweep");
    // Every subshape of F when there are few enough; otherwise, and for the
    // ambient shape, random samples of at most 40 boxes.
    const Shape F = fixture(ex.prefix + "_F");
    std::vector<Shape> subshapes;
    oracle::forEachSubshape(F, 40, [&](const Shape& G) { subshapes.push_back(G); }, kExhaustiveSubshapes + 1);
    if (subshapes.size() <= kExhaustiveSubshapes) {
      for (const Shape& G : subshapes) compare(G, pair, ex.prefix + " subshape of F");
      c.recorded["exhaustive"][ex.prefix + "_F"] = subshapes.size();
    } else {
      for (const Shape& G : oracle::randomSubshapes(F, 40, kSampledSubshapes, rng))
        compare(G, pair, ex.prefix + " sampled subshape of F");
      c.recorded["sampled"][ex.prefix + "_F"] = kSampledSubshapes;
    }
    for (const Shape& G : oracle::randomSubshapes(pair.ambient, 40, kSampledSubshapes, rng))
      compare(G, pair, ex.prefix + " sampled subshape of I");
    c.recorded["sampled"][ex.prefix + "_I"] = kSampledSubshapes;
  }
  int pairs = 0;
  for (int i = 0; pairs < 100 && i < 400; ++i) {
    const auto g = randomComposable(c.seed * 1000003ULL + static_cast<std::uint64_t>(i), 1 + i % 4);
    const Filtration f = flatten(g.decomposition);
    if (f.steps.empty()) continue;
    std::vector<Shape> kParts{f.base};
    for (std::size_t s = 0; s + 1 < f.steps.size(); ++s) kParts.push_back(f.steps[s].grid);
    const DivisionPair pair{unite(2, kParts), f.steps.back().grid, g.shape};
    const auto dr = checkDivisionPair(pair, engine);
    if (!c.expect(dr.verdict == Verdict::Yes, "generated pair is a division pair", {{"index", i}, {"failures", dr.failures}}))
      continue;
    ++pairs;
    const auto bs = g.shape.boxes();
    std::uniform_int_distribution<std::size_t> pick(0, bs.size() - 1);
    for (int t = 0; t < 5; ++t) {
      const Shape F = t % 2 ? close(2, {bs[pick(rng)]}) : close(2, {bs[pick(rng)], bs[pick(rng)]});
      compare(F, pair, json{{"generated", i}});
    }
  }
  c.expect(pairs == 100, "100 generated division pairs", pairs);
  c.recorded["comparisons"] = compared;
  c.recorded["branches"] = branches;
}

void pullbacks(Ctx& c) {
  std::mt19937_64 rng(c.seed ^ 0x9b11bac4ULL);
  int squares = 0;
  for (const std::string name : {"EX_I", "SQ(3,3)"}) {
    const Shape target = fixture(name);
    std::vector<Simplex> maps;
    for (const auto& n : boxLevels(2, 2))
      for (const Simplex& s : nerveLevel(target, n).simplices)
        if (injective(s)) maps.push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    int found = 0;
    for (int attempt = 0; found < 50 && attempt < 10000; ++attempt) {
      const Simplex& s = maps[pick(rng)];
      const Simplex& t = maps[pick(rng)];
      const ShapeMap f = productMap(standardGrid(s.level()), target, s);
      const ShapeMap g = productMap(standardGrid(t.level()), target, t);
      const auto sq = gridPullback(f, g);
      bool disjoint = false;
      for (int a = 0; a < 2; ++a) {
        std::vector<Coord> common;
        std::set_intersection(s.maps[a].begin(), s.maps[a].end(), t.maps[a].begin(), t.maps[a].end(),
                              std::back_inserter(common));
        disjoint = disjoint || common.empty();
        if (sq) c.expect(sq->intersectedImages[a] == common, "intersected images", {{"f", toString(s)}, {"g", toString(t)}});
      }
      c.expect(disjoint == !sq.has_value(), "pullback exists iff images meet", {{"f", toString(s)}, {"g", toString(t)}});
      if (!sq) continue;
      ++found;
      c.expect(pullbackNerveCheck(*sq, boxLevels(2, 2)), "pullback at nerve levels up to (2,2)",
               {{"target", name}, {"f", toString(s)}, {"g", toString(t)}});
    }
    c.expect(found == 50, "50 pullback squares into " + name, found);
    squares += found;
  }
  c.recorded["squares"] = squares;
}

void properties(Ctx& c) {
  int heights[8] = {};
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = c.seed * 7919ULL + static_cast<std::uint64_t>(i);
    const auto g = randomComposable(seed, 1 + i % 6);
    const json where = {{"seed", seed}};
    const std::string v = validateDecomposition(g.shape, g.decomposition);
    c.expect(v.empty(), "certificate validates", {{"seed", seed}, {"reason", v}});
    AdmittabilityEngine engine;
    const auto comp = isComposable(g.shape, engine);
    c.expect(comp.verdict == Verdict::Yes, "generated shape is composable", {{"seed", seed}, {"reason", comp.reason}});
    c.expect(verifyVertebraUnion(g.shape, engine).holds, "vertebra union", where);
    std::vector<Shape> vertebrae;
    for (const auto& e : enumerateVertebrae(g.shape, 2)) vertebrae.push_back(e.shape);
    const auto cv = checkCovering(g.shape, vertebrae);
    c.expect(cv.verdict && oracle::covering(g.shape, vertebrae).holds(), "vertebrae cover", where);
    std::vector<Shape> parts{g.decomposition.base};
    for (const auto& p : g.decomposition.pieces) parts.push_back(p.shape);
    const auto cd = checkCovering(g.shape, parts);
    c.expect(cd.verdict && oracle::covering(g.shape, parts).holds(), "decomposition covers", where);
    ++heights[std::min(7, g.decomposition.height())];
  }
  c.recorded["height_histogram"] = heights;
}

void regressionCounts(Ctx& c) {
  const Shape pw = fixture("PW");
  const std::size_t vertebrae = enumerateVertebrae(pw, 2).size();
  const std::size_t oracleVertebrae = oracle::vertebraWindows(pw, 2).size();
  const std::size_t subgrids = countClosedSubgridImages(pw);
  const std::size_t oracleSubgrids = oracle::closedSubgridCount(pw);
  c.recorded["pw_vertebrae"] = vertebrae;
  c.recorded["pw_subgrids"] = subgrids;
  c.expect(vertebrae == oracleVertebrae && vertebrae == kPinwheelVertebrae, "PW vertebra count",
           {{"library", vertebrae}, {"oracle", oracleVertebrae}, {"frozen", kPinwheelVertebrae}});
  c.expect(subgrids == oracleSubgrids && subgrids == kPinwheelSubgrids, "PW closed subgrid count",
           {{"library", subgrids}, {"oracle", oracleSubgrids}, {"frozen", kPinwheelSubgrids}});
}

struct CheckDef {
  SuiteCheckInfo info;
  std::function<void(Ctx&)> run;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {{"c01_pinwheel", "Pinwheel suite", false}, pinwheel},
      {{"c02_composable", "Composable fixtures", true}, composable},
      {{"c03_grids", "Grid detection", false}, grids},
      {{"c04_nerve_counts", "Nerve counts of standard grids", false}, nerveCounts},
      {{"c05_segal", "Segal set property", true}, segal},
      {{"c06_truncation", "Truncation compatibility", false}, truncation},
      {{"c07_division", "Division pairs and boxdot factoring", false}, division},
      {{"c08_fillable", "Fillable equivalence", true}, fillable},
      {{"c09_pullbacks", "Grid pullbacks", false}, pullbacks},
      {{"c10_properties", "Random composable property run", true}, properties},
      {{"c11_regression_counts", "Pinwheel regression counts", false}, regressionCounts},
  };
  return defs;
}

}  // namespace

std::vector<SuiteCheckInfo> suiteChecks() {
  std::vector<SuiteCheckInfo> out;
  for (const auto& d : registry()) out.push_back(d.info);
  return out;
}

SuiteReport runSuite(const SuiteConfig& config) {
  struct DirGuard {
    explicit DirGuard(const std::optional<std::string>& dir) : active(dir.has_value()) {
      if (active) setFixtureDirectory(dir);
    }
    ~DirGuard() {
      if (active) setFixtureDirectory(std::nullopt);
    }
    bool active;
  } guard(config.fixtureDir);

  SuiteReport report;
  report.seed = config.seed;
  for (const auto& def : registry()) {
    CheckResult r;
    r.name = def.info.name;
    r.title = def.info.title;
    if (config.skip.count(r.name) || (config.quick && def.info.slow)) {
      r.status = CheckStatus::Skipped;
      report.checks.push_back(std::move(r));
      continue;
    }
    Ctx ctx(config.seed);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      def.run(ctx);
    } catch (const std::exception& e) {
      ctx.expect(false, "check raised an exception", e.what());
    }
    r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.status = ctx.failureCount == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    if (r.status == CheckStatus::Fail)
      r.details = {{"failure_count", ctx.failureCount}, {"failures", ctx.failures}, {"recorded", ctx.recorded}};
    else
      r.details = ctx.recorded;
    report.checks.push_back(std::move(r));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace pastebox
