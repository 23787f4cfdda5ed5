#include "pastebox/shape.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pastebox {

struct Shape::Impl {
  int dim = 0;
  std::vector<Box> boxes;
  std::unordered_set<Box, BoxHash> members;
  std::uint64_t hash = 0;
};

std::shared_ptr<const Shape::Impl> Shape::makeImpl(int dim, std::vector<Box> boxes) {
  if (dim < 0 || dim > kMaxDim) throw PasteboxError("shape dimension out of range");
  for (const Box& b : boxes)
    if (b.ambient() != dim)
      throw PasteboxError("box " + toString(b) + " does not have dimension " + std::to_string(dim));
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  auto impl = std::make_shared<Shape::Impl>();
  impl->dim = dim;
  impl->members.reserve(boxes.size() * 2);
  std::uint64_t h = mix64(static_cast<std::uint64_t>(dim) + 0x51ed);
  BoxHash bh;
  for (const Box& b : boxes) {
    impl->members.insert(b);
    h = mix64(h ^ bh(b));
  }
  impl->hash = mix64(h ^ boxes.size());
  impl->boxes = std::move(boxes);
  return impl;
}

namespace {

using VertexIndex = std::unordered_map<Vertex, std::vector<Box>, VertexHash>;

/// Worklist fixpoint of corner-face and join closure.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(int dim) : dim_(dim) {}

  void add(const Box& b) {
    if (b.ambient() != dim_) throw PasteboxError("close: mixed tuple lengths at " + toString(b));
    if (!set_.insert(b).second) return;
    byLo_[b.lo].push_back(b);
    byHi_[b.hi].push_back(b);
    pending_.push_back(b);
  }

  std::vector<Box> run() {
    while (!pending_.empty()) {
      const Box b = pending_.back();
      pending_.pop_back();
      for (const Box& f : cornerSubboxes(b)) add(f);
      for (int i = 0; i < dim_; ++i) {
        if (!b.strictIn(i)) continue;
        joinWith(b, byLo_, b.lo.with(i, b.hi[i]), /*asFirst=*/true);
        joinWith(b, byHi_, b.hi.with(i, b.lo[i]), /*asFirst=*/false);
      }
    }
    return {set_.begin(), set_.end()};
  }

 private:
  void joinWith(const Box& b, const VertexIndex& index, const Vertex& key, bool asFirst) {
    auto it = index.find(key);
    if (it == index.end()) return;
    const std::vector<Box> partners = it->second;
    for (const Box& c : partners) {
      auto joined = asFirst ? tryJoin(b, c) : tryJoin(c, b);
      if (joined) add(*joined);
    }
  }

  int dim_;
  std::unordered_set<Box, BoxHash> set_;
  VertexIndex byLo_;
  VertexIndex byHi_;
  std::vector<Box> pending_;
};

}  // namespace

Shape::Shape() : Shape(0) {}

Shape::Shape(int dim) : impl_(makeImpl(dim, {})) {}

Shape Shape::fromClosedBoxes(int dim, std::vector<Box> boxes) {
  if (auto violation = findClosureViolation(dim, boxes)) throw PasteboxError(*violation);
  return fromClosedBoxesUnchecked(dim, std::move(boxes));
}

Shape Shape::fromClosedBoxesUnchecked(int dim, std::vector<Box> boxes) {
  Shape s;
  s.impl_ = makeImpl(dim, std::move(boxes));
  return s;
}

int Shape::dim() const { return impl_->dim; }
std::size_t Shape::size() const { return impl_->boxes.size(); }
std::span<const Box> Shape::boxes() const { return impl_->boxes; }
bool Shape::contains(const Box& b) const { return impl_->members.count(b) != 0; }
std::uint64_t Shape::hash() const { return impl_->hash; }

std::vector<Vertex> Shape::vertices() const {
  std::vector<Vertex> out;
  for (const Box& b : impl_->boxes)
    if (b.lo == b.hi) out.push_back(b.lo);
  return out;
}

std::vector<Box> Shape::boxesOfDimension(int k) const {
  std::vector<Box> out;
  for (const Box& b : impl_->boxes)
    if (b.dimension() == k) out.push_back(b);
  return out;
}

int Shape::topDimension() const {
  int top = -1;
  for (const Box& b : impl_->boxes) top = std::max(top, b.dimension());
  return top;
}

std::vector<std::vector<Coord>> Shape::coordinateValues() const {
  std::vector<std::set<Coord>> sets(static_cast<std::size_t>(dim()));
  for (const Box& b : impl_->boxes)
    if (b.lo == b.hi)
      for (int a = 0; a < dim(); ++a) sets[static_cast<std::size_t>(a)].insert(b.lo[a]);
  std::vector<std::vector<Coord>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::optional<Box> Shape::boundingBox() const {
  if (empty()) return std::nullopt;
  Vertex lo = impl_->boxes.front().lo;
  Vertex hi = lo;
  for (const Box& b : impl_->boxes) {
    for (int a = 0; a < dim(); ++a) {
      lo[a] = std::min(lo[a], b.lo[a]);
      hi[a] = std::max(hi[a], b.hi[a]);
    }
  }
  return Box(lo, hi);
}

bool Shape::isSubshapeOf(const Shape& other) const {
  if (dim() != other.dim()) return false;
  return std::all_of(impl_->boxes.begin(), impl_->boxes.end(), [&](const Box& b) { return other.contains(b); });
}

std::vector<Box> Shape::difference(const Shape& other) const {
  std::vector<Box> out;
  for (const Box& b : impl_->boxes)
    if (!other.contains(b)) out.push_back(b);
  return out;
}

Shape Shape::filter(const std::function<bool(const Box&)>& keep) const {
  std::vector<Box> kept;
  for (const Box& b : impl_->boxes)
    if (keep(b)) kept.push_back(b);
  return fromClosedBoxesUnchecked(dim(), std::move(kept));
}

bool Shape::operator==(const Shape& other) const {
  if (impl_ == other.impl_) return true;
  return dim() == other.dim() && hash() == other.hash() && impl_->boxes == other.impl_->boxes;
}

std::string describe(const Shape& shape) {
  std::ostringstream out;
  out << "shape(dim=" << shape.dim() << ", boxes=" << shape.size() << ")";
  return out.str();
}

std::optional<std::string> findClosureViolation(int dim, std::span<const Box> boxes) {
  std::unordered_set<Box, BoxHash> set;
  VertexIndex byLo;
  for (const Box& b : boxes) {
    if (b.ambient() != dim) return "box " + toString(b) + " does not have dimension " + std::to_string(dim);
    if (set.insert(b).second) byLo[b.lo].push_back(b);
  }
  for (const Box& b : set) {
    for (const Box& f : cornerSubboxes(b))
      if (!set.count(f)) return "missing face " + toString(f) + " of " + toString(b);
  }
  for (const Box& b : set) {
    for (int i = 0; i < dim; ++i) {
      if (!b.strictIn(i)) continue;
      auto it = byLo.find(b.lo.with(i, b.hi[i]));
      if (it == byLo.end()) continue;
      for (const Box& c : it->second) {
        auto j = tryJoin(b, c);
        if (j && !set.count(*j)) return "missing join " + toString(*j) + " of " + toString(b) + " and " + toString(c);
      }
    }
  }
  return std::nullopt;
}

Shape close(int dim, std::span<const Box> generators) {
  ClosureBuilder builder(dim);
  for (const Box& b : generators) builder.add(b);
  return Shape::fromClosedBoxesUnchecked(dim, builder.run());
}

Shape close(int dim, std::initializer_list<Box> generators) {
  return close(dim, std::span<const Box>(generators.begin(), generators.size()));
}

Shape unite(const Shape& first, const Shape& second) {
  if (first.dim() != second.dim()) throw PasteboxError("union: dimension mismatch");
  if (second.isSubshapeOf(first)) return first;
  if (first.isSubshapeOf(second)) return second;
  std::vector<Box> all(first.boxes().begin(), first.boxes().end());
  all.insert(all.end(), second.boxes().begin(), second.boxes().end());
  return close(first.dim(), all);
}

Shape unite(int dim, std::span<const Shape> parts) {
  std::vector<Box> all;
  for (const Shape& p : parts) {
    if (p.dim() != dim) throw PasteboxError("union: dimension mismatch");
    all.insert(all.end(), p.boxes().begin(), p.boxes().end());
  }
  return close(dim, all);
}

Shape intersect(const Shape& first, const Shape& second) {
  if (first.dim() != second.dim()) throw PasteboxError("intersect: dimension mismatch");
  const Shape& small = first.size() <= second.size() ? first : second;
  const Shape& large = first.size() <= second.size() ? second : first;
  return small.filter([&](const Box& b) { return large.contains(b); });
}

Shape truncate(const Shape& shape, int k) {
  if (k < 0 || k > shape.dim()) throw PasteboxError("truncate: k out of range");
  return shape.filter([k](const Box& b) { return b.dimension() <= k; });
}

Shape hyperplaneSlice(const Shape& shape, std::span<const std::pair<int, Coord>> constraints) {
  std::set<int> seen;
  for (const auto& [a, c] : constraints) {
    if (a < 0 || a >= shape.dim()) throw PasteboxError("slice: direction out of range");
    if (!seen.insert(a).second) throw PasteboxError("slice: repeated direction");
  }
  return shape.filter([&](const Box& b) {
    for (const auto& [a, c] : constraints)
      if (b.lo[a] != c || b.hi[a] != c) return false;
    return true;
  });
}

Shape restrictToWindow(const Shape& shape, const Box& window) {
  return shape.filter([&](const Box& b) { return window.contains(b); });
}

namespace {
void checkAxes(std::span<const int> axes, int dim) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 0 || axes[i] >= dim) throw PasteboxError("axis out of range");
    if (i > 0 && axes[i] <= axes[i - 1]) throw PasteboxError("axes must be strictly increasing");
  }
}
}  // namespace

Shape embedAxes(const Shape& shape, std::span<const int> axes, int dim) {
  if (static_cast<int>(axes.size()) != shape.dim()) throw PasteboxError("embedAxes: axis count must equal shape dimension");
  checkAxes(axes, dim);
  std::vector<Box> out;
  out.reserve(shape.size());
  for (const Box& b : shape.boxes()) {
    Vertex lo(dim), hi(dim);
    for (std::size_t i = 0; i < axes.size(); ++i) {
      lo[axes[i]] = b.lo[static_cast<int>(i)];
      hi[axes[i]] = b.hi[static_cast<int>(i)];
    }
    out.emplace_back(lo, hi);
  }
  return Shape::fromClosedBoxesUnchecked(dim, std::move(out));
}

Shape projectAxes(const Shape& shape, std::span<const int> axes) {
  checkAxes(axes, shape.dim());
  const int k = static_cast<int>(axes.size());
  std::vector<bool> kept(static_cast<std::size_t>(shape.dim()), false);
  for (int a : axes) kept[static_cast<std::size_t>(a)] = true;
  std::vector<Box> out;
  out.reserve(shape.size());
  std::optional<Vertex> reference;
  for (const Box& b : shape.boxes()) {
    if (!reference) reference = b.lo;
    Vertex lo(k), hi(k);
    for (int a = 0; a < shape.dim(); ++a) {
      if (kept[static_cast<std::size_t>(a)]) continue;
      if (b.lo[a] != (*reference)[a] || b.hi[a] != (*reference)[a])
        throw PasteboxError("projectAxes: shape is not constant in direction " + std::to_string(a));
    }
    for (int i = 0; i < k; ++i) {
      lo[i] = b.lo[axes[static_cast<std::size_t>(i)]];
      hi[i] = b.hi[axes[static_cast<std::size_t>(i)]];
    }
    out.emplace_back(lo, hi);
  }
  return Shape::fromClosedBoxesUnchecked(k, std::move(out));
}

std::vector<int> spanningAxes(const Shape& shape) {
  std::vector<int> out;
  auto values = shape.coordinateValues();
  for (int a = 0; a < shape.dim(); ++a)
    if (values[static_cast<std::size_t>(a)].size() > 1) out.push_back(a);
  return out;
}

std::pair<Shape, std::vector<std::vector<Coord>>> compressCoordinates(const Shape& shape) {
  auto values = shape.coordinateValues();
  std::vector<std::map<Coord, Coord>> rank(values.size());
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t i = 0; i < values[a].size(); ++i) rank[a][values[a][i]] = static_cast<Coord>(i);
  std::vector<Box> out;
  out.reserve(shape.size());
  for (const Box& b : shape.boxes()) {
    Vertex lo = b.lo, hi = b.hi;
    for (int a = 0; a < shape.dim(); ++a) {
      lo[a] = rank[static_cast<std::size_t>(a)].at(b.lo[a]);
      hi[a] = rank[static_cast<std::size_t>(a)].at(b.hi[a]);
    }
    out.emplace_back(lo, hi);
  }
  return {Shape::fromClosedBoxesUnchecked(shape.dim(), std::move(out)), values};
}

}  // namespace pastebox
