#include "pastebox/box.hpp"

#include <sstream>

namespace pastebox {

Vertex::Vertex(int dim) {
  if (dim < 0 || dim > kMaxDim) throw PasteboxError("vertex dimension out of range: " + std::to_string(dim));
  dim_ = static_cast<std::uint8_t>(dim);
}

Vertex::Vertex(std::initializer_list<Coord> coords) : Vertex(static_cast<int>(coords.size())) {
  int a = 0;
  for (Coord v : coords) {
    if (v < 0) throw PasteboxError("negative coordinate");
    c_[static_cast<std::size_t>(a++)] = v;
  }
}

Vertex::Vertex(const std::vector<Coord>& coords) : Vertex(static_cast<int>(coords.size())) {
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (coords[a] < 0) throw PasteboxError("negative coordinate");
    c_[a] = coords[a];
  }
}

Vertex Vertex::with(int a, Coord value) const {
  Vertex v = *this;
  v[a] = value;
  return v;
}

std::vector<Coord> Vertex::coords() const { return {c_.begin(), c_.begin() + dim_}; }

bool Vertex::leq(const Vertex& other) const {
  for (int a = 0; a < dim_; ++a)
    if (c_[static_cast<std::size_t>(a)] > other[a]) return false;
  return true;
}

Box::Box(Vertex lo_, Vertex hi_) : lo(lo_), hi(hi_) {
  if (lo.dim() != hi.dim()) throw PasteboxError("box corners have different dimensions");
  if (!lo.leq(hi)) throw PasteboxError("box corners are not ordered: " + toString(lo) + " > " + toString(hi));
}

int Box::dimension() const {
  int k = 0;
  for (int a = 0; a < ambient(); ++a) k += strictIn(a) ? 1 : 0;
  return k;
}

bool Box::contains(const Box& inner) const { return lo.leq(inner.lo) && inner.hi.leq(hi); }

std::string toString(const Vertex& v) {
  std::ostringstream out;
  out << '(';
  for (int a = 0; a < v.dim(); ++a) out << (a ? "," : "") << v[a];
  out << ')';
  return out.str();
}

std::string toString(const Box& b) { return "(" + toString(b.lo) + "," + toString(b.hi) + ")"; }

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(v.dim());
  for (int a = 0; a < v.dim(); ++a) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v[a])));
  return static_cast<std::size_t>(h);
}

std::size_t BoxHash::operator()(const Box& b) const noexcept {
  VertexHash vh;
  return static_cast<std::size_t>(mix64(vh(b.lo) * 31 + vh(b.hi)));
}

std::vector<Box> cornerSubboxes(const Box& b) {
  std::vector<Box> out{b};
  for (int a = 0; a < b.ambient(); ++a) {
    if (!b.strictIn(a)) continue;
    const std::size_t n = out.size();
    out.reserve(n * 3);
    for (std::size_t i = 0; i < n; ++i) {
      Box low = out[i];
      low.hi[a] = b.lo[a];
      Box high = out[i];
      high.lo[a] = b.hi[a];
      out.push_back(low);
      out.push_back(high);
    }
  }
  return out;
}

std::vector<Box> facets(const Box& b) {
  std::vector<Box> out;
  for (int a = 0; a < b.ambient(); ++a) {
    if (!b.strictIn(a)) continue;
    Box low = b;
    low.hi[a] = b.lo[a];
    Box high = b;
    high.lo[a] = b.hi[a];
    out.push_back(low);
    out.push_back(high);
  }
  return out;
}

std::optional<Box> tryJoin(const Box& first, const Box& second) {
  if (first.ambient() != second.ambient()) throw PasteboxError("tryJoin: dimension mismatch");
  int stacking = -1;
  for (int a = 0; a < first.ambient(); ++a) {
    const bool s1 = first.strictIn(a);
    const bool s2 = second.strictIn(a);
    if (s1 != s2) return std::nullopt;
    if (!s1) {
      if (first.lo[a] != second.lo[a]) return std::nullopt;
      continue;
    }
    if (first.lo[a] == second.lo[a] && first.hi[a] == second.hi[a]) continue;
    if (first.hi[a] == second.lo[a]) {
      if (stacking >= 0) return std::nullopt;
      stacking = a;
      continue;
    }
    return std::nullopt;
  }
  return Box(first.lo, second.hi);
}

std::vector<Box> productBoxes(const IntervalChoices& choices) {
  const int d = static_cast<int>(choices.size());
  std::vector<Box> out;
  for (const auto& c : choices)
    if (c.empty()) return out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    Vertex lo(d), hi(d);
    for (int a = 0; a < d; ++a) {
      const auto& [u, v] = choices[static_cast<std::size_t>(a)][idx[static_cast<std::size_t>(a)]];
      lo[a] = u;
      hi[a] = v;
    }
    out.emplace_back(lo, hi);
    int a = d - 1;
    for (; a >= 0; --a) {
      auto& i = idx[static_cast<std::size_t>(a)];
      if (++i < choices[static_cast<std::size_t>(a)].size()) break;
      i = 0;
    }
    if (a < 0) break;
  }
  return out;
}

std::vector<std::pair<Coord, Coord>> orderedPairs(const std::vector<Coord>& values) {
  std::vector<std::pair<Coord, Coord>> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j) out.emplace_back(values[i], values[j]);
  return out;
}

}  // namespace pastebox
