#include "pastebox/shape_map.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pastebox {

Vertex ShapeMap::operator()(const Vertex& v) const {
  auto it = vertexMap.find(v);
  if (it == vertexMap.end()) throw PasteboxError("vertex map is not defined at " + toString(v));
  return it->second;
}

Box ShapeMap::apply(const Box& b) const {
  const Vertex lo = (*this)(b.lo);
  const Vertex hi = (*this)(b.hi);
  if (!lo.leq(hi)) throw PasteboxError("image of " + toString(b) + " is not a box");
  return Box(lo, hi);
}

MapReport validateShapeMap(const ShapeMap& m) {
  if (m.source.dim() != m.target.dim()) throw PasteboxError("shape map between different dimensions");
  for (const Vertex& v : m.source.vertices())
    if (!m.vertexMap.count(v)) throw PasteboxError("vertex map is not total: missing " + toString(v));
  for (const Box& b : m.source.boxes()) {
    const Vertex lo = m(b.lo);
    const Vertex hi = m(b.hi);
    if (!lo.leq(hi)) return {false, "image of " + toString(b) + " is not ordered"};
    for (int a = 0; a < b.ambient(); ++a) {
      if (b.lo[a] == b.hi[a] && lo[a] != hi[a])
        return {false, "box " + toString(b) + " loses degeneracy in direction " + std::to_string(a + 1)};
    }
    const Box image(lo, hi);
    if (!m.target.contains(image)) return {false, "image " + toString(image) + " of " + toString(b) + " is not in the target"};
  }
  return {};
}

bool isInjective(const ShapeMap& m) {
  std::unordered_set<Vertex, VertexHash> seen;
  for (const Vertex& v : m.source.vertices())
    if (!seen.insert(m(v)).second) return false;
  return true;
}

ShapeMap identityMap(const Shape& shape) {
  ShapeMap m{shape, shape, {}};
  for (const Vertex& v : shape.vertices()) m.vertexMap.emplace(v, v);
  return m;
}

std::vector<Box> imageBoxes(const ShapeMap& m) {
  std::vector<Box> out;
  out.reserve(m.source.size());
  for (const Box& b : m.source.boxes()) out.push_back(m.apply(b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> Simplex::level() const {
  std::vector<int> out;
  for (const auto& m : maps) out.push_back(static_cast<int>(m.size()) - 1);
  return out;
}

std::vector<std::vector<Coord>> Simplex::images() const {
  std::vector<std::vector<Coord>> out;
  for (const auto& m : maps) {
    std::vector<Coord> im = m;
    im.erase(std::unique(im.begin(), im.end()), im.end());
    out.push_back(std::move(im));
  }
  return out;
}

Vertex Simplex::at(const Vertex& x) const {
  Vertex out(dim());
  for (int a = 0; a < dim(); ++a) {
    const auto& m = maps[static_cast<std::size_t>(a)];
    if (x[a] < 0 || static_cast<std::size_t>(x[a]) >= m.size()) throw PasteboxError("vertex outside simplex domain");
    out[a] = m[static_cast<std::size_t>(x[a])];
  }
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0x2545f491;
  for (const auto& m : s.maps) {
    h = mix64(h ^ m.size());
    for (Coord c : m) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)));
  }
  return static_cast<std::size_t>(h);
}

std::string toString(const Simplex& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t a = 0; a < s.maps.size(); ++a) {
    out << (a ? "," : "") << '(';
    for (std::size_t i = 0; i < s.maps[a].size(); ++i) out << (i ? "," : "") << s.maps[a][i];
    out << ')';
  }
  out << ')';
  return out.str();
}

void checkMonotone(const Simplex& s) {
  for (const auto& m : s.maps) {
    if (m.empty()) throw PasteboxError("simplex sequence is empty");
    if (!std::is_sorted(m.begin(), m.end())) throw PasteboxError("simplex sequence is not monotone: " + toString(s));
  }
}

bool imagesSatisfyBoxCondition(const Shape& shape, const std::vector<std::vector<Coord>>& images) {
  if (static_cast<int>(images.size()) != shape.dim()) throw PasteboxError("box condition: dimension mismatch");
  IntervalChoices choices;
  for (const auto& im : images) choices.push_back(orderedPairs(im));
  for (const Box& b : productBoxes(choices))
    if (!shape.contains(b)) return false;
  return true;
}

bool satisfiesBoxCondition(const Shape& shape, const Simplex& s) {
  checkMonotone(s);
  return imagesSatisfyBoxCondition(shape, s.images());
}

ShapeMap productMap(const Shape& source, const Shape& target, const Simplex& s) {
  if (source.dim() != s.dim() || target.dim() != s.dim()) throw PasteboxError("productMap: dimension mismatch");
  ShapeMap m{source, target, {}};
  for (const Vertex& v : source.vertices()) m.vertexMap.emplace(v, s.at(v));
  return m;
}

std::optional<Simplex> tupleOf(const ShapeMap& f, const std::vector<int>& level) {
  const int d = f.source.dim();
  if (static_cast<int>(level.size()) != d) throw PasteboxError("tupleOf: level has wrong length");
  Simplex s;
  for (int a = 0; a < d; ++a) {
    std::vector<Coord> seq;
    for (int i = 0; i <= level[static_cast<std::size_t>(a)]; ++i) {
      Vertex x(d);
      x[a] = i;
      seq.push_back(f(x)[a]);
    }
    s.maps.push_back(std::move(seq));
  }
  for (const Vertex& v : f.source.vertices())
    if (f(v) != s.at(v)) return std::nullopt;
  return s;
}

}  // namespace pastebox
