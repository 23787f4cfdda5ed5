#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pastebox/box.hpp"

namespace pastebox {

/// A finite set of boxes of fixed ambient dimension, closed under corner
/// faces and joins. Immutable; copies share storage.
///
/// Boxes are kept sorted by (lo, hi), which is the canonical form used for
/// equality and hashing. Shapes are compared literally, never up to
/// isomorphism or translation.
class Shape {
 public:
  /// The empty shape of dimension 0.
  Shape();
  /// The empty shape of dimension `dim`.
  explicit Shape(int dim);

  /// Builds a shape from a box set that must already be closed; throws
  /// naming the first missing face or join otherwise.
  static Shape fromClosedBoxes(int dim, std::vector<Box> boxes);
  /// Trusts the caller that `boxes` is closed. Duplicates are removed.
  static Shape fromClosedBoxesUnchecked(int dim, std::vector<Box> boxes);

  int dim() const;
  bool empty() const { return size() == 0; }
  std::size_t size() const;
  std::span<const Box> boxes() const;
  bool contains(const Box& b) const;
  std::uint64_t hash() const;

  std::vector<Vertex> vertices() const;
  /// Boxes with exactly `k` strict directions.
  std::vector<Box> boxesOfDimension(int k) const;
  /// Largest dimension of a member box, or -1 when empty.
  int topDimension() const;
  /// Per-direction sorted list of coordinate values carried by vertices.
  std::vector<std::vector<Coord>> coordinateValues() const;
  /// Componentwise min and max vertex; nullopt when empty.
  std::optional<Box> boundingBox() const;

  bool isSubshapeOf(const Shape& other) const;
  /// Boxes of `this` missing from `other`.
  std::vector<Box> difference(const Shape& other) const;

  /// Keeps the boxes satisfying `keep`; the kept set must be closed.
  Shape filter(const std::function<bool(const Box&)>& keep) const;

  bool operator==(const Shape& other) const;

 private:
  struct Impl;
  static std::shared_ptr<const Impl> makeImpl(int dim, std::vector<Box> boxes);
  std::shared_ptr<const Impl> impl_;
};

struct ShapeHash {
  std::size_t operator()(const Shape& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};

std::string describe(const Shape& shape);

/// First violation of face or join closure in a box set, if any.
std::optional<std::string> findClosureViolation(int dim, std::span<const Box> boxes);

/// Least box set containing the generators and closed under corner faces and
/// joins. Terminates because every produced coordinate is a generator
/// coordinate.
Shape close(int dim, std::span<const Box> generators);
Shape close(int dim, std::initializer_list<Box> generators);

Shape unite(const Shape& first, const Shape& second);
Shape unite(int dim, std::span<const Shape> parts);
/// Box-set intersection; the result is closed without re-closure.
Shape intersect(const Shape& first, const Shape& second);
/// Keeps the boxes with at most `k` strict directions.
Shape truncate(const Shape& shape, int k);
/// Keeps the boxes with lo[a] = hi[a] = c for every constraint (a, c).
Shape hyperplaneSlice(const Shape& shape, std::span<const std::pair<int, Coord>> constraints);
/// Boxes lying inside `window` (componentwise between its corners).
Shape restrictToWindow(const Shape& shape, const Box& window);

/// Places a k-dimensional shape on the strictly increasing 0-based
/// directions `axes` of a `dim`-dimensional lattice, zero elsewhere.
Shape embedAxes(const Shape& shape, std::span<const int> axes, int dim);
/// Drops every direction outside `axes`. Throws unless each dropped
/// direction is constant across the shape.
Shape projectAxes(const Shape& shape, std::span<const int> axes);
/// Directions along which the shape is not constant.
std::vector<int> spanningAxes(const Shape& shape);

/// Rank-remaps every direction's used coordinate values onto 0..m-1.
/// Returns the compressed shape and, per direction, the original values.
/// Never applied implicitly.
std::pair<Shape, std::vector<std::vector<Coord>>> compressCoordinates(const Shape& shape);

}  // namespace pastebox
