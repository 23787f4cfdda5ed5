#include "pastebox/toolkit.hpp"

#include <random>
#include <sstream>

namespace pastebox {

namespace {

struct Node {
  Box window;
  bool leaf = true;
  std::vector<std::vector<Coord>> lines;
  std::vector<Node> children;
};

class Grower {
 public:
  Grower(std::uint64_t seed, int budget) : rng_(seed), budget_(budget) {}

  Node grow(const Box& window, bool root) {
    Node n;
    n.window = window;
    if (budget_ <= 0) return n;
    if (!root && coin(0.45)) return n;
    std::vector<std::vector<Coord>> lines;
    bool split = false;
    for (int a = 0; a < 2; ++a) {
      std::vector<Coord> l{window.lo[a]};
      for (Coord c = window.lo[a] + 1; c < window.hi[a]; ++c)
        if (coin(0.4)) l.push_back(c);
      l.push_back(window.hi[a]);
      split = split || l.size() > 2;
      lines.push_back(std::move(l));
    }
    if (!split) {
      // Force one interior line when the window has room for it.
      const int a = window.hi[0] - window.lo[0] >= 2 ? 0 : 1;
      if (window.hi[a] - window.lo[a] < 2) return n;
      std::uniform_int_distribution<Coord> pick(window.lo[a] + 1, window.hi[a] - 1);
      auto& l = lines[static_cast<std::size_t>(a)];
      l.insert(l.begin() + 1, pick(rng_));
    }
    --budget_;
    n.leaf = false;
    n.lines = lines;
    IntervalChoices choices;
    for (const auto& l : lines) {
      std::vector<std::pair<Coord, Coord>> steps;
      for (std::size_t i = 0; i + 1 < l.size(); ++i) steps.emplace_back(l[i], l[i + 1]);
      choices.push_back(std::move(steps));
    }
    for (const Box& w : productBoxes(choices)) n.children.push_back(grow(w, false));
    return n;
  }

  Coord extent() { return std::uniform_int_distribution<Coord>(2, 6)(rng_); }

 private:
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::mt19937_64 rng_;
  int budget_;
};

void collectLeaves(const Node& n, std::vector<Box>& out) {
  if (n.leaf) {
    out.push_back(n.window);
    return;
  }
  for (const Node& c : n.children) collectLeaves(c, out);
}

Decomposition certify(const Shape& whole, const Node& n) {
  Decomposition dec;
  dec.shape = restrictToWindow(whole, n.window);
  if (n.leaf) {
    dec.leaf = true;
    return dec;
  }
  dec.base = baseForLines(dec.shape, n.lines);
  const auto w = detectGrid(dec.base);
  if (!w) throw PasteboxError("randomComposable: base at " + toString(n.window) + " is not a grid");
  dec.baseWitness = *w;
  for (const Node& c : n.children) dec.pieces.push_back(certify(whole, c));
  return dec;
}

}  // namespace

GeneratedShape randomComposable(std::uint64_t seed, int budget) {
  if (budget < 1) throw PasteboxError("randomComposable: budget must be at least 1");
  Grower g(seed, budget);
  const Coord w = g.extent();
  const Coord h = g.extent();
  const Node root = g.grow(Box(Vertex{0, 0}, Vertex{w, h}), true);
  std::vector<Box> leaves;
  collectLeaves(root, leaves);
  Shape shape = close(2, leaves);
  // Split each edge at the vertices lying on it, so neighbouring pieces
  // agree on their shared boundary.
  std::vector<Box> generators(shape.boxes().begin(), shape.boxes().end());
  const auto vertices = shape.vertices();
  for (const Box& e : shape.boxesOfDimension(1))
    for (const Vertex& m : vertices)
      if (e.lo.leq(m) && m.leq(e.hi) && m != e.lo && m != e.hi) {
        generators.emplace_back(e.lo, m);
        generators.emplace_back(m, e.hi);
      }
  shape = close(2, generators);
  return {shape, certify(shape, root)};
}

namespace {

constexpr int kScale = 80;
constexpr int kMargin = 40;

bool joinIrreducible(const Shape& s, const Box& e) {
  int a = 0;
  while (!e.strictIn(a)) ++a;
  for (Coord m = e.lo[a] + 1; m < e.hi[a]; ++m) {
    const Vertex mid = e.lo.with(a, m);
    if (s.contains(Box(e.lo, mid)) && s.contains(Box(mid, e.hi))) return false;
  }
  return true;
}

void drawSheet(std::ostream& out, const Shape& s, int offsetX) {
  for (const Box& b : s.boxesOfDimension(2)) {
    out << "  <rect class=\"box\" x=\"" << offsetX + kMargin + kScale * b.lo[0] << "\" y=\""
        << kMargin + kScale * b.lo[1] << "\" width=\"" << kScale * (b.hi[0] - b.lo[0]) << "\" height=\""
        << kScale * (b.hi[1] - b.lo[1]) << "\"/>\n";
  }
  for (const Box& e : s.boxesOfDimension(1)) {
    if (!joinIrreducible(s, e)) continue;
    out << "  <line class=\"edge\" x1=\"" << offsetX + kMargin + kScale * e.lo[0] << "\" y1=\""
        << kMargin + kScale * e.lo[1] << "\" x2=\"" << offsetX + kMargin + kScale * e.hi[0] << "\" y2=\""
        << kMargin + kScale * e.hi[1] << "\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const Box& v : s.boxesOfDimension(0)) {
    const int x = offsetX + kMargin + kScale * v.lo[0];
    const int y = kMargin + kScale * v.lo[1];
    out << "  <circle class=\"vertex\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\"/>\n";
    out << "  <text x=\"" << x + 5 << "\" y=\"" << y - 5 << "\">(" << v.lo[0] << "," << v.lo[1] << ")</text>\n";
  }
}

}  // namespace

std::string renderSvg(const Shape& input) {
  if (input.dim() > 3) throw PasteboxError("renderSvg: dimension " + std::to_string(input.dim()) + " above 3");
  std::vector<std::pair<Coord, Shape>> sheets;
  if (input.dim() == 3) {
    std::vector<Coord> zs;
    if (!input.empty()) zs = input.coordinateValues()[2];
    const std::vector<int> xy{0, 1};
    for (Coord z : zs) {
      const std::pair<int, Coord> pin{2, z};
      sheets.emplace_back(z, projectAxes(hyperplaneSlice(input, std::span(&pin, 1)), xy));
    }
  } else {
    std::vector<int> axes;
    for (int a = 0; a < input.dim(); ++a) axes.push_back(a);
    sheets.emplace_back(0, embedAxes(input, axes, 2));
  }
  Coord maxX = 0;
  Coord maxY = 0;
  for (const auto& [z, s] : sheets)
    if (auto bb = s.boundingBox()) {
      maxX = std::max(maxX, bb->hi[0]);
      maxY = std::max(maxY, bb->hi[1]);
    }
  const int sheetWidth = kScale * maxX + 2 * kMargin;
  const int width = sheetWidth * static_cast<int>(std::max<std::size_t>(1, sheets.size()));
  const int height = kScale * maxY + 2 * kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  out << "  <style>.box{fill:#3b6fb6;fill-opacity:0.3;stroke:none}.edge{stroke:#000;stroke-width:1.5}"
         ".vertex{fill:#000}text{font:10px sans-serif}</style>\n";
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    const int offset = sheetWidth * static_cast<int>(i);
    if (input.dim() == 3)
      out << "  <text class=\"sheet\" x=\"" << offset + 4 << "\" y=\"12\">z = " << sheets[i].first << "</text>\n";
    drawSheet(out, sheets[i].second, offset);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pastebox
